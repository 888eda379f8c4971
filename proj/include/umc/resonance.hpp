#pragma once

#include <string>
#include <vector>

#include "umc/cohomology.hpp"
#include "umc/presentations.hpp"

namespace umc {

/// Linear subspace represented both by a basis and by defining equations,
/// cross-validated at construction.
struct LinearSubspace {
    int ambient = 0;      // coordinate count
    RatMatrix basis;      // rows = basis vectors
    RatMatrix equations;  // rows = linear forms vanishing on the subspace

    int dim() const { return static_cast<int>(basis.row_count()); }
    bool valid() const;
};

enum class ComponentKind { Isolated, Embedded, McCoolPlane, McCoolThreeSpace };

struct Component {
    ComponentKind kind = ComponentKind::Isolated;
    std::vector<int> indices;  // (i,j) or (i,j,k)
    LinearSubspace space;
    long isotropy = 0;

    std::string name() const;  // "L(4,3)", "L'(4,3)", "C(1,2)", "C(1,2,3)"
};

/// Certificate shared by the verification entry points.
struct CheckReport {
    bool pass = true;
    unsigned long checks_run = 0;
    unsigned seed = 0;
    std::vector<std::string> failures;

    void fail(std::string what);
};

/// The isolated components L_{ij}, 2 <= j < i <= n, in the u-coordinates of
/// variables_desc(n). Empty for n = 2.
std::vector<Component> components(int n);

LinearSubspace make_L(int n, int i, int j);
LinearSubspace make_Lprime(int n, int i, int j);

/// Theorems 7.1/7.2 at desk scale: point membership via cup_kernel, pairwise
/// trivial intersections, isotropy ranks C(j-1,2), and the restriction
/// property from n to n+1.
CheckReport verify_components(int n, unsigned seed = 20240901);

/// For every triple (i,j,k): the diagonal vector w_{ijk} of the Groebner
/// presentation cuts out a (k+1)-dimensional subspace of L_{ij}, with
/// equality exactly when k = j-1.
CheckReport upper_bound_check(int n);

struct SchemeReport {
    std::vector<Component> isolated;
    std::vector<Component> embedded;
    KnReport kn;
    bool perpendicular_ok = true;  // eq. characterization L'_{ij} = L_{ij}-perp
    bool pass() const { return kn.pass && perpendicular_ok; }
};

SchemeReport scheme(int n, const BuchbergerOptions& opts = {});

/// Example-8.7 certificates at n = 4: the ten generators of J_43 annihilate
/// the module, and sqrt(J_43) = (x21, x31, x32, x41, x42).
CheckReport ann_membership_example87(const BuchbergerOptions& opts = {});

/// Prop 8.8 inclusion: for d+1 <= j < i <= n, dim cup_kernel(u_ij) >= d+1.
CheckReport depth_lower_bound(int n, int d);

/// Declared component inventory of R_1 of the full McCool group PSigma_n,
/// in its own n(n-1)-dimensional coordinate space (ordered pairs (i,j),
/// i != j, listed ascending).
std::vector<Component> mccool_inventory(int n);

struct ComparisonReport {
    int n = 0;
    int max_dim_upper = 0;       // n-1
    int max_dim_full = 0;        // 3 (2 when n < 3)
    long planes = 0;             // C(n,2)
    long threespaces = 0;        // C(n,3)
    bool upper_has_nonisotropic = false;  // some L_{ij} with j >= 3
    bool epi_obstruction = false;         // no epimorphism PSigma_n ->> PSigma_n^+
};

ComparisonReport compare_groups(int n);

}  // namespace umc
