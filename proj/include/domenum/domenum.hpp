#pragma once

#include "classify.hpp"
#include "completion.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"
#include "io.hpp"
#include "oracles.hpp"
#include "reductions.hpp"
#include "separators.hpp"
#include "split_enum.hpp"
#include "stream.hpp"
#include "trans_enum.hpp"
#include "vertex_set.hpp"
