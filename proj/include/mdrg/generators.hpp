#pragma once

#include <cstddef>
#include <vector>

#include "mdrg/colored_graph.hpp"
#include "mdrg/ppoly.hpp"
#include "mdrg/rational.hpp"
#include "mdrg/scheme.hpp"
#include "mdrg/scheme_classes.hpp"

namespace mdrg {

/// Cycle C_n on vertices "0".."n-1"; n >= 3.
ColoredGraph cycle(int n);
/// Complete graph K_n; n >= 2.
ColoredGraph complete(int n);
/// Hamming graph H(k,q): words of length k over {0..q-1}, named by their
/// digits joined with ','; adjacent iff they differ in exactly one position.
ColoredGraph hamming_graph(int k, int q);

/// Cartesian product; factor i contributes its colors shifted by the total m
/// of the preceding factors. Vertices are the factor names joined with ','.
/// Every factor must be connected.
ColoredGraph cartesian_product(const std::vector<ColoredGraph>& factors);

/// Length-k symmetrization of a scheme with m non-identity classes. Classes
/// are tagged by n in N^m with |n| <= k and vertices are words over the base
/// vertex names joined with ','. Throws std::invalid_argument if the base is
/// not an association scheme or an entry leaves {0,1}.
SchemeClasses symmetrize(const SchemeClasses& base, int k);

/// The 24 permutations of (+-1, +-1, 0, 0), named by sign characters such as
/// "+0-0". Color 1 joins squared distance 4, color 2 squared distance 6.
ColoredGraph cell24();

/// Generalized 24-cell intersection numbers, tags A0..A4 with A0 the identity.
/// Throws std::invalid_argument if an entry is negative or the tensor is not
/// commutative with consistent row sums. Integrality is not required; see
/// IntersectionTensor::validate.
IntersectionTensor gen24cell(const Rational& ell, const Rational& s);

/// Z = {I(x)I, I(x)X + X(x)I, X(x)X} on 4 vertices, tags A0, A1, A2.
SchemeClasses pauli_scheme4();

/// A0 = o, A2 = (1,0), A3 = (0,1), A1 = (1,1), A4 = (2,0).
Labeling labeling_ad1();
/// A0 = o, A2 = (1,0), A3 = (0,1), A1 = (0,2), A4 = (2,0).
Labeling labeling_ad2();

} // namespace mdrg
