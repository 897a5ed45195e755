#pragma once

#include <optional>
#include <vector>

#include "dynzeta/matrix.hpp"
#include "dynzeta/sequence_transforms.hpp"
#include "dynzeta/series.hpp"
#include "dynzeta/zeta_algebra.hpp"

namespace dynzeta {

/// Raised when a spectrum makes the requested computation undefined: an
/// eigenvalue at +-1, a root of unity of too-small order, or a singular
/// I - A^k. Carries the first order at which definedness fails (0 when the
/// failure is order-independent).
class NonAdmissibleError : public std::domain_error {
  public:
    NonAdmissibleError(const std::string& what, int failing_order)
        : std::domain_error(what), failing_order_(failing_order) {}
    int failing_order() const { return failing_order_; }

  private:
    int failing_order_;
};

/// Parities (mod 2) of the number of real eigenvalues below -1 and above
/// +1, counted with algebraic multiplicity. They determine the zeta
/// function of a linear map completely.
struct SpectralClass {
    int sigma_minus = 0;
    int sigma_plus = 0;

    bool operator==(const SpectralClass&) const = default;
};

enum class RootInterval { BelowMinusOne, AboveOne };

/// Number of real roots of monic p in the open interval, counted with
/// multiplicity (squarefree decomposition + one Sturm chain per factor).
/// A root exactly at -1 or +1 is never classifiable and raises
/// NonAdmissibleError.
int real_root_count(const Polynomial& p, RootInterval interval);

SpectralClass spectral_class(const RationalMatrix& a);
SpectralClass spectral_class(const Polynomial& char_polynomial);

/// Largest n <= n_max such that no eigenvalue of A is a root of unity of
/// order <= n; 0 when 1 is an eigenvalue.
int admissibility_order(const RationalMatrix& a, int n_max);
int admissibility_order(const Polynomial& char_polynomial, int n_max);

/// The closed-form zeta function of a linear map of the given class:
/// (0,0) -> 1/(1-t), (0,1) -> 1-t, (1,0) -> 1+t, (1,1) -> 1/(1+t).
MonicSeries linear_zeta(const SpectralClass& c, int order);

/// Fixed point index of the k-th iterate of the linear map A at the
/// origin: sign det(I - A^k), always +1 or -1.
int local_index(const RationalMatrix& a, int k);

/// The index sequence (sign det(I - A^k))_{k=1..n}. Requires A to be
/// n-admissible; otherwise reports the first failing order.
IndexSequence index_sequence_of_matrix(const RationalMatrix& a, int n);

/// Orbit data in either form: aggregated signed counts per period, or
/// concrete linearizations (period k, matrix of the k-th iterate along the
/// orbit) which are classified and folded into counts.
struct OrbitLinearization {
    int period = 1;
    RationalMatrix matrix;
};

struct OrbitTable {
    OrbitCounts counts;
    std::vector<OrbitLinearization> linearizations;

    /// Signed counts with the linearizations classified and merged in.
    OrbitCounts to_counts() const;
};

/// zeta(f) = prod_m (1-t^m)^(-a_m) (1-t^(2m))^(-b_m).
MonicSeries orbit_zeta(const OrbitTable& orbits, int order);

/// zeta(f^k) for a single period-m class of orbits, with d = gcd(k, m):
/// (1-t^(m/d))^(-d a) (1-t^(2m/d))^(-d b) for odd k/d, and
/// (1-t^(m/d))^(-d(a+2b)) for even k/d.
MonicSeries orbit_zeta_iterate(int m, long a, long b, int k, int order);

/// zeta(f)(t) = zeta(f^k restricted to one component)(t^k) for a periodic
/// point set cycling through k components. Thin wrapper over the t -> t^k
/// substitution, kept as the named operation it implements.
MonicSeries iterate_zeta_axiom(const MonicSeries& zeta_on_component, int k, int target_order);

/// Product of the zeta functions of disjoint invariant pieces; the empty
/// product is 1 at the given order.
MonicSeries multiplicative_assemble(const std::vector<MonicSeries>& parts, int order);

/// Generating series of the Euler characteristics of symmetric products:
/// 1 + sum_n chi(SP_n(X)) t^n = (1-t)^(-chi).
MonicSeries macdonald_series(long chi, int order);

/// Local zeta function of an isolated fixed point of an orientation
/// preserving surface homeomorphism: (1-t^q)^r / (1-t). A polynomial of
/// degree rq-1 exactly when r > 0.
MonicSeries lecalvez_zeta(int q, int r, int order);

/// Comparison of the zeta data of AB and BA for a rectangular pair
/// (A: d x d', B: d' x d). The nonzero spectra of the two products agree,
/// so admissible pairs must always PASS.
struct CommutativityReport {
    bool pass = false;
    IndexSequence indices_ab;
    IndexSequence indices_ba;
    MonicSeries zeta_ab;
    MonicSeries zeta_ba;
};

CommutativityReport commutativity_witness(const RationalMatrix& a, const RationalMatrix& b,
                                          int order);

}  // namespace dynzeta
