#pragma once

#include "coxfold/ao_move.hpp"
#include "coxfold/bounds.hpp"
#include "coxfold/complexity.hpp"
#include "coxfold/coxeter_matrix.hpp"
#include "coxfold/decomposition.hpp"
#include "coxfold/decomposition_io.hpp"
#include "coxfold/errors.hpp"
#include "coxfold/fold.hpp"
#include "coxfold/graph_algorithms.hpp"
#include "coxfold/graph_io.hpp"
#include "coxfold/halving.hpp"
#include "coxfold/labeled_graph.hpp"
#include "coxfold/non_example.hpp"
#include "coxfold/special_graph.hpp"
#include "coxfold/tameness.hpp"
#include "coxfold/tits.hpp"
#include "coxfold/unfolding.hpp"
#include "coxfold/words.hpp"
