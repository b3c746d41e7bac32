#pragma once

#include <cstdint>
#include <string>

namespace fskit {

/// Outcome of one seeded property suite. Witness strings are deterministic
/// for a fixed seed, so reports reproduce byte-for-byte.
struct LawReport {
    std::string law;
    std::uint64_t seed = 0;
    int cases = 0;
    int violations = 0;
    std::string first_witness;

    bool passed() const noexcept { return violations == 0; }
};

/// Both De Morgan identities over random pairs on a 0.05 grade lattice
/// (|E| = 4, |X| = 5), exact equality.
LawReport law_demorgan(std::uint64_t seed, int cases, bool inject_fault = false);

/// The five image/preimage laws over random mappings and families
/// (|X|, |Y| <= 4, |E|, |E'| <= 3). The object map is generated surjective
/// and the complement laws are exercised over the full parameter sets,
/// which is the regime where they hold.
LawReport law_maplaws(std::uint64_t seed, int cases, bool inject_fault = false);

/// Additive/multiplicative identities of soft reals plus the crisp-lift
/// identities (|r|-lift and product-lift), all exact.
LawReport law_identities(std::uint64_t seed, int cases, bool inject_fault = false);

/// The three norm axioms for the lifted weighted 2-norm on R^3 with
/// |E| = 3 over random (x, y, scalar) samples.
LawReport law_normaxioms(std::uint64_t seed, int cases, bool inject_fault = false);

}  // namespace fskit
