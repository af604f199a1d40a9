// Simplicial homology of Delta-complexes over Z (exact, with generators and
// class coordinates), Z/p and Q, built on the Smith normal form engine.
#pragma once

#include <memory>
#include <optional>
#include <string>

#include "coverhom/delta_complex.hpp"
#include "coverhom/snf.hpp"

namespace coverhom {

struct Coefficients {
    enum Kind { Integers, ModP, Rationals } kind = Integers;
    std::uint32_t p = 0;
    static Coefficients Z() { return {Integers, 0}; }
    static Coefficients mod(std::uint32_t p) { return {ModP, p}; }
    static Coefficients Q() { return {Rationals, 0}; }
};

SparseIntMatrix boundary_matrix(const DeltaComplex& x, int d);
// Boundary matrix of the quotient complex C(X)/C(A).
SparseIntMatrix relative_boundary_matrix(const DeltaComplex& x, const CellSubset& a, int d,
                                         const std::vector<std::vector<long long>>& ambient_to_rel,
                                         const std::vector<std::vector<long long>>& rel_to_ambient);

struct ClassCalc;  // opaque coordinate data

struct HomologyGroup {
    int degree = 0;
    long long rank = 0;
    std::vector<Zint> torsion;  // divisors > 1 in divisibility order
    // Explicit generator cycles: free generators first, then one per torsion
    // divisor (ambient cell ids; for relative groups, supported off A).
    std::vector<Chain> generators;
    std::shared_ptr<const ClassCalc> calc;

    std::string to_string() const;  // e.g. "Z^2 + Z_2"
};

struct HomologyOptions {
    bool want_generators = true;
    bool want_coordinates = true;
};

HomologyGroup homology(const DeltaComplex& x, int d, Coefficients coeff = Coefficients::Z(),
                       const HomologyOptions& opts = {});

std::vector<HomologyGroup> all_homology(const DeltaComplex& x, Coefficients coeff = Coefficients::Z(),
                                        const HomologyOptions& opts = {});

struct ClassCoordinates {
    std::vector<Zint> free_part;
    std::vector<Zint> torsion_part;  // reduced mod the matching divisor
};

// z must be a cycle in H's degree (for relative groups: a relative cycle
// given in ambient ids). Throws with the offending boundary otherwise.
ClassCoordinates class_coordinates(const Chain& z, const HomologyGroup& h);
// Minimal m >= 1 with m*z a boundary; nullopt means infinite order.
std::optional<Zint> order_of_class(const Chain& z, const HomologyGroup& h);

// Solve boundary(w) = c over Z in the chain complex of x.
std::optional<Chain> solve_boundary(const DeltaComplex& x, const Chain& c);

// Relative homology of (X, A) with chains written in ambient ids.
HomologyGroup relative_homology(const DeltaComplex& x, const CellSubset& a, int d,
                                const HomologyOptions& opts = {});
// Boundary of a relative cycle, viewed as a chain on A (ambient ids).
Chain connecting_delta(const DeltaComplex& x, const CellSubset& a, const Chain& z);

struct PseudomanifoldViolation {
    int dim = 0;
    long long cell = 0;  // the (n-1)-cell with incidence count != 2
    long long incidences = 0;
};

// Fundamental cycle of a closed pseudomanifold in top degree n: a +-1 cycle
// spanning degree-n homology if orientable, nullopt if non-orientable.
// Throws std::runtime_error if not a pseudomanifold (violation reported).
std::optional<Chain> fundamental_cycle(const DeltaComplex& x, int n,
                                       PseudomanifoldViolation* violation = nullptr);

}  // namespace coverhom
