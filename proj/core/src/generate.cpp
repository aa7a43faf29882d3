#include "dst/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

#include "dst/error.hpp"

namespace dst {

const char* generated_structure_name(GeneratedStructure s) {
  switch (s) {
    case GeneratedStructure::random_family: return "random";
    case GeneratedStructure::consonant: return "consonant";
    case GeneratedStructure::quasi_bayesian: return "quasi-bayesian";
    case GeneratedStructure::dual_quasi_bayesian: return "dual-quasi-bayesian";
  }
  return "unknown";
}

std::optional<GeneratedStructure> parse_generated_structure(std::string_view name) {
  if (name == "random") return GeneratedStructure::random_family;
  if (name == "consonant") return GeneratedStructure::consonant;
  if (name == "quasi-bayesian") return GeneratedStructure::quasi_bayesian;
  if (name == "dual-quasi-bayesian") return GeneratedStructure::dual_quasi_bayesian;
  return std::nullopt;
}

namespace {

// mt19937_64 itself is pinned by the standard; the derived draws below avoid
// stdlib distributions, whose output is implementation-defined.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  double unit() {  // [0, 1), 53-bit resolution
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double exponential() {  // strictly positive variate
    double u;
    do {
      u = unit();
    } while (u == 0.0);
    return -std::log(u);
  }

  std::uint64_t below(std::uint64_t bound) {  // [0, bound)
    return engine_() % bound;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {  // Fisher-Yates on this stream
    for (std::size_t i = items.size(); i > 1; --i)
      std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<double> draw_masses(Draw& draw, std::size_t count) {
  // Normalized exponential variates; redraw on the (rare) sub-floor entry so
  // the requested focal count survives validation.
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<double> values(count);
    double sum = 0.0;
    for (auto& v : values) {
      v = draw.exponential();
      sum += v;
    }
    double smallest = 1.0;
    for (auto& v : values) {
      v /= sum;
      smallest = std::min(smallest, v);
    }
    if (smallest > 1e-9) return values;
  }
  fail(Errc::infeasible_spec, "could not draw strictly positive masses");
}

Frame default_frame(std::uint32_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return Frame(std::move(labels));
}

std::vector<std::uint32_t> shuffled_elements(Draw& draw, std::uint32_t n) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  draw.shuffle(perm);
  return perm;
}

std::vector<Subset> consonant_family_draw(Draw& draw, std::uint32_t n,
                                          std::size_t count) {
  if (count > static_cast<std::size_t>(n) + 1)
    fail(Errc::infeasible_spec,
         "a chain over " + std::to_string(n) + " elements holds at most " +
             std::to_string(n + 1) + " sets");
  auto perm = shuffled_elements(draw, n);
  // Distinct prefix lengths, the largest pinned at n so the chain ends at
  // the universe.
  std::vector<std::uint32_t> sizes(n);
  std::iota(sizes.begin(), sizes.end(), 0u);
  draw.shuffle(sizes);
  sizes.resize(count - 1);
  sizes.push_back(n);
  std::sort(sizes.begin(), sizes.end());

  std::vector<Subset> family;
  family.reserve(count);
  for (auto size : sizes) {
    Subset s = Subset::empty(n);
    for (std::uint32_t i = 0; i < size; ++i) s.set(perm[i]);
    family.push_back(std::move(s));
  }
  return family;
}

std::vector<Subset> quasi_bayesian_family_draw(Draw& draw, std::uint32_t n,
                                               std::size_t count) {
  if (count == 0) fail(Errc::infeasible_spec, "focal count must be positive");
  const std::size_t groups = count - 1;
  if (groups > n)
    fail(Errc::infeasible_spec,
         std::to_string(groups) + " disjoint non-empty sets do not fit in " +
             std::to_string(n) + " elements");

  std::vector<Subset> family;
  family.reserve(count);
  if (groups > 0) {
    auto perm = shuffled_elements(draw, n);
    std::vector<std::uint32_t> sizes(groups, 1);
    // A single group must stay below the universe; several disjoint groups
    // are below it by construction.
    std::uint32_t budget = n - static_cast<std::uint32_t>(groups);
    if (groups == 1 && budget > 0) budget -= 1;
    std::uint32_t extra = budget == 0
                              ? 0
                              : static_cast<std::uint32_t>(draw.below(budget + 1));
    for (std::uint32_t i = 0; i < extra; ++i)
      sizes[static_cast<std::size_t>(draw.below(groups))] += 1;

    std::size_t offset = 0;
    for (auto size : sizes) {
      Subset s = Subset::empty(n);
      for (std::uint32_t i = 0; i < size; ++i)
        s.set(perm[offset + i]);
      offset += size;
      family.push_back(std::move(s));
    }
  }
  family.push_back(Subset::universe(n));
  return family;
}

std::vector<Subset> random_family_draw(Draw& draw, std::uint32_t n,
                                       std::size_t count, bool subnormal) {
  if (count == 0) fail(Errc::infeasible_spec, "focal count must be positive");
  if (n < 63 && count > (std::size_t{1} << n))
    fail(Errc::infeasible_spec, "more focal sets requested than subsets exist");

  std::unordered_set<Subset, SubsetHash> distinct;
  distinct.insert(subnormal ? Subset::empty(n) : Subset::universe(n));
  while (distinct.size() < count) {
    Subset s = Subset::empty(n);
    for (std::size_t w = 0; w < s.word_count(); ++w) {
      std::uint64_t bits = draw.bits();
      for (std::uint32_t i = 0; i < 64; ++i) {
        std::uint32_t element = static_cast<std::uint32_t>(w) * 64 + i;
        if (element >= n) break;
        if ((bits >> i) & 1) s.set(element);
      }
    }
    distinct.insert(std::move(s));
  }
  std::vector<Subset> family(distinct.begin(), distinct.end());
  std::sort(family.begin(), family.end(), CanonicalLess{});
  return family;
}

}  // namespace

MassFunction generate_mass(const GeneratorSpec& spec) {
  if (spec.n == 0) fail(Errc::infeasible_spec, "frame size must be positive");
  if (spec.focal_count == 0) fail(Errc::infeasible_spec, "focal count must be positive");

  Draw draw(spec.seed);
  std::vector<Subset> family;
  switch (spec.structure) {
    case GeneratedStructure::consonant:
      family = consonant_family_draw(draw, spec.n, spec.focal_count);
      break;
    case GeneratedStructure::quasi_bayesian:
    case GeneratedStructure::dual_quasi_bayesian:
      family = quasi_bayesian_family_draw(draw, spec.n, spec.focal_count);
      break;
    case GeneratedStructure::random_family:
      family = random_family_draw(draw, spec.n, spec.focal_count, spec.subnormal);
      break;
  }

  auto masses = draw_masses(draw, family.size());
  std::vector<std::pair<Subset, double>> entries;
  entries.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    entries.emplace_back(std::move(family[i]), masses[i]);

  MassFunction m = MassFunction::make(default_frame(spec.n), std::move(entries));
  if (spec.structure == GeneratedStructure::dual_quasi_bayesian)
    return complement_mass(m);
  return m;
}

}  // namespace dst
