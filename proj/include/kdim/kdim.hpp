#pragma once

#include "kdim/diminishers.hpp"
#include "kdim/edge_coloring.hpp"
#include "kdim/generate.hpp"
#include "kdim/gkf.hpp"
#include "kdim/graph.hpp"
#include "kdim/instance.hpp"
#include "kdim/kernelize.hpp"
#include "kdim/oracles.hpp"
#include "kdim/solvers.hpp"
#include "kdim/turing_kernel.hpp"
#include "kdim/util.hpp"
#include "kdim/verify.hpp"
