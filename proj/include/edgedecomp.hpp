#ifndef EDGEDECOMP_HPP
#define EDGEDECOMP_HPP

#include "edgedecomp/formula.hpp"
#include "edgedecomp/gadgets.hpp"
#include "edgedecomp/graph.hpp"
#include "edgedecomp/io.hpp"
#include "edgedecomp/k_irregular.hpp"
#include "edgedecomp/matching.hpp"
#include "edgedecomp/predicates.hpp"
#include "edgedecomp/reductions.hpp"
#include "edgedecomp/regular_parts.hpp"
#include "edgedecomp/semicoloring.hpp"
#include "edgedecomp/solver.hpp"
#include "edgedecomp/trees.hpp"

#endif // EDGEDECOMP_HPP
