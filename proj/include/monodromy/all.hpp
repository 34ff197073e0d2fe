#pragma once

#include "monodromy/action.hpp"
#include "monodromy/commutator_calculus.hpp"
#include "monodromy/error.hpp"
#include "monodromy/fibre_graph.hpp"
#include "monodromy/free_word.hpp"
#include "monodromy/group.hpp"
#include "monodromy/homology.hpp"
#include "monodromy/int_matrix.hpp"
#include "monodromy/matrix_rep.hpp"
#include "monodromy/word.hpp"
