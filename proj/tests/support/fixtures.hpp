#ifndef NOOHI_TESTS_FIXTURES_HPP
#define NOOHI_TESTS_FIXTURES_HPP

// Shared by the unit tests, the acceptance runner and the benchmarks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "noohi/group_spec.hpp"
#include "noohi/presentation.hpp"
#include "noohi/scheme.hpp"
#include "noohi/vk.hpp"

namespace noohi::fixtures {

/// Names of the bundled corpus files, without extension.
std::vector<std::string> corpus_names();
SchemeConfig load_corpus(const std::string& name);
std::string corpus_path(const std::string& name);

/// Configs whose singular and branch groups are trivial.
std::vector<std::string> trivial_singular_corpus();

/// Random presentation: up to `max_gens` generators x1.., up to
/// `max_relators` relators of length at most `max_length`. Some relators are
/// built as g = w so that Tietze elimination has something to do.
Presentation random_presentation(std::mt19937_64& rng, int max_gens = 4, int max_relators = 4,
                                 int max_length = 6);

/// Random connected configuration with n <= max_n components, m <= max_m
/// singulars, at most max_branches branches, trivial singular and branch
/// groups, and component groups drawn from {1, C2, C3}.
SchemeConfig random_trivial_config(std::mt19937_64& rng, int max_n = 4, int max_m = 4, int max_branches = 7);

/// Random configuration with C2 singular groups and C2 branch groups mapping
/// isomorphically into C2 components (trivial maps elsewhere).
SchemeConfig random_c2_config(std::mt19937_64& rng, int max_n = 3, int max_m = 2, int max_branches = 4);

/// 1, C2, C3, S3.
std::vector<GroupSpec> small_groups();

/// A fixed homomorphism a -> b between two of the small groups: the
/// inclusion or identity when there is one, the sign map S3 -> C2, and the
/// trivial map otherwise. Images are on b's canonical generators.
std::map<GeneratorSymbol, Word> default_hom(const GroupSpec& a, const GroupSpec& b);
std::map<GeneratorSymbol, Word> trivial_hom(const GroupSpec& a);

/// VK data with s legs drawn from the grid: leg k has group `leg`, psi the
/// default map (trivial on even-numbered legs) and phi the default map.
VKData grid_vk_data(const GroupSpec& pi, const GroupSpec& pi_prime, const GroupSpec& leg, int s);

/// Binomial coefficient, small arguments.
std::uint64_t binomial(int n, int k);

}  // namespace noohi::fixtures

#endif
