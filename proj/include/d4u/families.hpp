#pragma once

#include <optional>

#include "d4u/chars.hpp"

namespace d4u {

// The seventeen families of irreducible characters, classified by the
// highest root subgroups outside the kernel. The odd/even variants of
// F_{8,9,10} are mutually exclusive, so exactly seventeen apply to any q.
enum class FamilyId {
    F12, F11, F8910odd, F8910even, F89, F810, F910, F8, F9, F10,
    F567, F56, F57, F67, F5, F6, F7, Flin,
};

struct FamilyDescriptor {
    FamilyId id;
    std::string name;
    std::optional<Parity> parity;  // nullopt: both parities
    RootSet nonkernel;             // top roots required outside the kernel
    RootSet required_kernel;
    // (degree, count) rows at a given q
    std::vector<std::pair<long long, long long>> expected(long long q) const;
};

const std::vector<FamilyDescriptor>& family_descriptors();
const FamilyDescriptor& descriptor(FamilyId id);
std::optional<FamilyId> family_by_name(const std::string& name);

// Family of a character from its kernel signature.
FamilyId classify(const Group& g, const ClassFunction& chi);

struct FamilyReport {
    std::string name;
    std::size_t built = 0;
    std::map<long long, long long> by_degree;
    bool count_ok = false;
    bool degrees_ok = false;
    bool irreducible_ok = false;
    bool signature_ok = false;
    std::string note;
    bool pass() const {
        return count_ok && degrees_ok && irreducible_ok && signature_ok;
    }
};

// Shared quotient class data across family builds.
class BuildContext {
public:
    BuildContext(const Group& g, const ClassData& cd_u, bool parallel = true);

    const Group& group() const { return *g_; }
    const ClassData& ambient() const { return *cd_u_; }
    const ClassData& quotient(RootSet killed);
    bool parallel() const { return parallel_; }

private:
    const Group* g_;
    const ClassData* cd_u_;
    bool parallel_;
    std::map<RootSet, ClassData> cache_;
};

// Constructs the characters of one family (on the ambient class data of U)
// and verifies count, degrees, irreducibility and kernel signature against
// the descriptor. Verification failures are reported in the FamilyReport,
// never repaired.
FamilyReport build_family(BuildContext& ctx, FamilyId id,
                          std::vector<ClassFunction>& out);

struct TableReport {
    std::vector<ClassFunction> characters;
    std::vector<FamilyReport> families;
    bool families_ok = false;
    bool distinct_ok = false;
    bool orthonormal_ok = false;
    bool count_ok = false;
    bool degree_sum_ok = false;
    bool multiplicities_ok = false;
    std::map<long long, long long> by_degree;
    std::string diagnostic;
    bool pass() const {
        return families_ok && distinct_ok && orthonormal_ok && count_ok &&
               degree_sum_ok && multiplicities_ok;
    }
};

struct BuildAllOptions {
    bool parallel = true;
    bool check_orthogonality = true;
};

// The complete irreducible character table: all seventeen applicable
// families, with the completeness certificate (pairwise orthonormal, count
// equal to the class number, sum of squared degrees equal to the group
// order) and the degree-multiplicity check against the polynomials in
// v = q-1.
TableReport build_all(const Group& g, const ClassData& cd_u,
                      BuildAllOptions opts = {});

// Expected number of irreducible characters of each degree, as evaluated
// from the multiplicity polynomials in v = q-1.
std::map<long long, long long> expected_degree_multiplicities(long long q);

}  // namespace d4u
