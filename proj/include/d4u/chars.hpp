#pragma once

#include <map>
#include <string>

#include "d4u/classes.hpp"

namespace d4u {

// Linear character of a pattern subgroup P, given by parameters s_gamma for
// gamma in the root set: value(g) = phi(sum s_gamma * d_gamma(g)). Valid iff
// it is a homomorphism, i.e. s vanishes on every root expressible as a sum
// of two members of the root set (the derived directions); construction
// checks this structurally.
struct LinearChar {
    PatternSubgroup domain;
    std::array<fe, kNumRoots> params;
};

LinearChar linear_character(const Group& g, const PatternSubgroup& p,
                            const std::array<fe, kNumRoots>& params);

// phi-exponent of lambda at an element of the domain, in [0, p).
int linear_exp(const Group& g, const LinearChar& l, const Coords& c);
Cyc linear_value(const Group& g, const LinearChar& l, const Coords& c);

// Exact class function on a fixed ClassData, one cyclotomic value per class.
class ClassFunction {
public:
    ClassFunction(const ClassData& cd, std::vector<Cyc> values,
                  std::string family = {});

    const ClassData& classes() const { return *cd_; }
    const Cyc& value(std::uint32_t cls) const { return v_[cls]; }
    const std::vector<Cyc>& values() const { return v_; }
    const std::string& family() const { return family_; }
    void set_family(std::string f) { family_ = std::move(f); }

    // value at the identity; requires an integral value
    long long degree() const;

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.v_ == b.v_;
    }

private:
    const ClassData* cd_;
    std::vector<Cyc> v_;
    std::string family_;
};

// Induction of a linear character to the full (quotient) group, computed
// over the coordinate-complement transversal. The OpenMP kernel distributes
// classes; `induce_full_sum` is the serial whole-group reference used to
// cross-check the transversal at small q.
ClassFunction induce(const Group& g, const LinearChar& l, const ClassData& cd,
                     bool parallel = true);
ClassFunction induce_full_sum(const Group& g, const LinearChar& l,
                              const ClassData& cd);

// Views a class function of U/N as one of U/M for M contained in N.
ClassFunction inflate(const ClassFunction& chi, const ClassData& target);

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);

// Linear character of the whole (quotient) group as a class function.
ClassFunction linear_class_function(const Group& g, const ClassData& cd,
                                    const std::array<fe, kNumRoots>& params);

Cyc inner_product(const ClassFunction& a, const ClassFunction& b);
bool is_irreducible(const ClassFunction& chi);

// Roots alpha with chi(x_alpha(t)) = chi(1) for all t. Killed roots of the
// underlying quotient are in the kernel by construction.
RootSet kernel_roots(const Group& g, const ClassFunction& chi);

// Decomposition of chi restricted to X_alpha into the q characters
// phi_{alpha,s}, as (s, multiplicity) pairs with positive multiplicity.
std::vector<std::pair<fe, long long>> restrict_to_root_subgroup(
    const Group& g, const ClassFunction& chi, int alpha);

// mu_{alpha,s}: the linear character of V_alpha with parameter s at alpha
// induced up; irreducible of degree q^|leg(alpha)|.
ClassFunction midafi(const Group& g, int alpha, fe s, const ClassData& cd,
                     bool parallel = true);

// --- conjugation action on characters of an abelian normal pattern subgroup ---

// Parameters of lambda^k, lambda^k(a) = lambda(k a k^-1), for lambda a linear
// character of the abelian pattern subgroup A normal in the ambient quotient.
std::array<fe, kNumRoots> conj_params(const Group& g, const PatternSubgroup& a,
                                      const std::array<fe, kNumRoots>& params,
                                      const Coords& k);

// Character of the index-2 inertia subgroup T = A + k0*A: equals lambda on A
// and mu0 * lambda(k0^-1 y) on the nontrivial coset. Requires p = 2, k0
// normalizing A with k0^2 in ker(lambda)-compatible position (k0^2 = 1 here).
struct InertiaChar {
    PatternSubgroup domain_a;
    std::array<fe, kNumRoots> params;
    Coords k0;
    int mu0;  // +1 or -1
};

// The two extensions of a k0-invariant lambda to T, found by solving
// mu(k0)^2 = lambda(k0^2).
std::vector<InertiaChar> extend_to_inertia(const Group& g, const LinearChar& l,
                                           const Coords& k0);

ClassFunction induce_inertia(const Group& g, const InertiaChar& ic,
                             const ClassData& cd,
                             const std::vector<Coords>& transversal,
                             bool parallel = true);

// --- brute-force verification of the K-action representative sets ---

struct KOrbitReport {
    long long q = 0;
    Parity parity = Parity::odd;
    std::uint64_t stratum_size = 0;   // characters nontrivial on X_8, X_9, X_10
    std::size_t rep_count = 0;
    bool reps_in_stratum = false;
    bool orbits_disjoint = false;
    bool orbits_cover = false;
    bool stabilizers_ok = false;
    std::map<std::uint64_t, std::uint64_t> orbit_inventory;  // size -> #orbits
    bool pass() const {
        return reps_in_stratum && orbits_disjoint && orbits_cover && stabilizers_ok;
    }
};

// Conjugation action of K = X_1 X_2 X_4 on the q^7 linear characters of the
// abelian quotient subgroup A (roots {3,5,...,10} modulo X_11 X_12): orbit
// partition of the nondegenerate stratum, verification of the parity-specific
// representative set and of the stabilizer orders (trivial for odd q; order 2
// on the x,c-stratum for even q).
KOrbitReport k_orbit_analysis(const Group& g);

// First field element, in enumeration order, outside the index-2 additive
// subgroup {d*e*f*z^2 + c*d*z}; even q only.
fe t_cdef(const Field& f, fe c, fe d, fe e, fe ff);

}  // namespace d4u
