#pragma once

#include "tbi/bench.hpp"
#include "tbi/clique_solver.hpp"
#include "tbi/cost.hpp"
#include "tbi/diffusion.hpp"
#include "tbi/dispatch.hpp"
#include "tbi/generate.hpp"
#include "tbi/io.hpp"
#include "tbi/network.hpp"
#include "tbi/oracle.hpp"
#include "tbi/path_solver.hpp"
#include "tbi/tree_solver.hpp"
