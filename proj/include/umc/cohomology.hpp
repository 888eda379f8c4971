#pragma once

#include <map>
#include <vector>

#include "umc/exterior.hpp"
#include "umc/linalg.hpp"
#include "umc/module_element.hpp"

namespace umc {

/// All triples (i,j,k), k < j < i <= n, listed in descending lexicographic
/// order of (i,j,k): for n=4 this is 432, 431, 421, 321.
std::vector<PositionIndex> triples_desc(int n);

/// The cohomology ring A = E/<I^2> of the upper McCool group in degrees <= 3,
/// with a fixed complement basis for A^2 = E^2/I^2.
struct UpperMcCoolRing {
    int n = 0;
    std::vector<ExtGen> e1;        // descending
    std::vector<ExtMonomial> e2;   // descending
    std::vector<ExtMonomial> e3;   // descending
    std::vector<PositionIndex> triples;  // triples_desc(n)
    std::vector<ExtElement> relations;   // r*_{ijk} = (u_{ik}-u_{jk})^u_{ij}, parallel to triples

    RatMatrix relation_rref;                 // rref of the relation matrix in E^2 coordinates
    std::vector<std::size_t> pivot_cols;     // pivot E^2 columns (I^2 directions)
    std::vector<std::size_t> complement_cols;  // non-pivot columns: the A^2 basis

    std::size_t e2_index(const ExtMonomial& m) const;

    static UpperMcCoolRing build(int n);
};

/// Coordinates of a homogeneous element in the stored basis of its degree.
std::vector<Rat> e1_coords(const ExtElement& a, const UpperMcCoolRing& R);
std::vector<Rat> e2_coords(const ExtElement& a, const UpperMcCoolRing& R);
ExtElement from_e1_coords(const std::vector<Rat>& v, const UpperMcCoolRing& R);

/// Cup product of two degree-1 elements, as coordinates in the fixed
/// complement basis of A^2.
std::vector<Rat> cup(const ExtElement& a, const ExtElement& b, const UpperMcCoolRing& R);

/// Rank of the restriction /\^2 W -> A^2 of the cup product, where the rows
/// of W are a basis of a subspace of E^1 in e1 coordinates.
std::size_t cup_rank(const RatMatrix& W, const UpperMcCoolRing& R);

/// Basis (rows, in e1 coordinates) of {b : cup(a,b) = 0}; always contains a.
RatMatrix cup_kernel(const ExtElement& a, const UpperMcCoolRing& R);

}  // namespace umc
