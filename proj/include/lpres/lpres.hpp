#pragma once

/*
 * Umbrella header for the whole library: words and free group
 * endomorphisms, L-presentations, coset enumeration and verification,
 * subgroup classification, rewriting of subgroup presentations, abelian
 * invariants, low-index enumeration, graph folding, and the text and
 * JSON front ends.
 */

#include "abelian.hpp"
#include "action.hpp"
#include "classify.hpp"
#include "coset_table.hpp"
#include "endomorphism.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "folding.hpp"
#include "format.hpp"
#include "integer_matrix.hpp"
#include "low_index.hpp"
#include "orbits.hpp"
#include "parser.hpp"
#include "permutation.hpp"
#include "presentation.hpp"
#include "schreier.hpp"
#include "subgroup_presentation.hpp"
#include "todd_coxeter.hpp"
#include "tree.hpp"
#include "word.hpp"
