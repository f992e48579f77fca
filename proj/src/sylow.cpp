#include "sylowbench/sylow.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "sylowbench/catalog.hpp"
#include "sylowbench/errors.hpp"

namespace sylowbench {

namespace {

using ElementSet = std::vector<Permutation>;

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = s.size();
    PermutationHash ph;
    for (const Permutation& x : s) h = h * 1000003U ^ ph(x);
    return h;
  }
};

std::optional<Permutation> p_part(const Permutation& y, std::uint64_t p) {
  const std::uint64_t o = element_order(y);
  if (o % p != 0) return std::nullopt;
  return power(y, o / prime_power_part(o, p));
}

// Pseudo-random elements by product replacement with a fixed seed.
class ProductReplacement {
 public:
  explicit ProductReplacement(const PermGroup& g) : rng_(0x5eed5eedULL), degree_(g.degree()) {
    state_ = g.generators();
    if (state_.empty()) state_.emplace_back(degree_);
    while (state_.size() < 10) state_.push_back(state_[state_.size() % g.generators().size()]);
    accumulator_ = Permutation(degree_);
    for (int i = 0; i < 60; ++i) next();
  }

  Permutation next() {
    std::uniform_int_distribution<std::size_t> pick(0, state_.size() - 1);
    std::size_t i = pick(rng_), j = pick(rng_);
    while (j == i) j = pick(rng_);
    state_[i] = rng_() & 1U ? compose(state_[i], state_[j]) : compose(state_[j], state_[i]);
    accumulator_ = compose(accumulator_, state_[i]);
    return accumulator_;
  }

 private:
  std::mt19937_64 rng_;
  std::size_t degree_;
  std::vector<Permutation> state_;
  Permutation accumulator_;
};

std::optional<Permutation> next_extension(const PermGroup& n, const PermGroup& p_group, std::uint64_t p,
                                          const Caps& caps, std::size_t& skip) {
  if (n.order() <= caps.elements) {
    for (const Permutation& y : enumerate_elements(n, caps.elements)) {
      auto x = p_part(y, p);
      if (!x || p_group.contains(*x)) continue;
      if (skip > 0) {
        --skip;
        continue;
      }
      return x;
    }
    return std::nullopt;
  }
  ProductReplacement stream(n);
  for (int tries = 0; tries < 200000; ++tries) {
    auto x = p_part(stream.next(), p);
    if (!x || p_group.contains(*x)) continue;
    if (skip > 0) {
      --skip;
      continue;
    }
    return x;
  }
  throw Error("no p-element found outside the current p-subgroup");
}

std::vector<Permutation> intersect(const std::vector<ConjugateSubgroup>& orbit) {
  std::vector<Permutation> common = orbit.front().elements;
  for (std::size_t i = 1; i < orbit.size(); ++i) {
    std::vector<Permutation> next;
    std::set_intersection(common.begin(), common.end(), orbit[i].elements.begin(), orbit[i].elements.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  return common;
}

// Elements of N fixing every member of the orbit under conjugation.
std::uint64_t conjugation_kernel_order(const PermGroup& n, const std::vector<ConjugateSubgroup>& orbit,
                                       const Caps& caps) {
  std::uint64_t count = 0;
  for (const Permutation& x : enumerate_elements(n, caps.elements)) {
    bool fixes_all = std::all_of(orbit.begin(), orbit.end(), [&](const ConjugateSubgroup& q) {
      return std::all_of(q.generators.begin(), q.generators.end(),
                         [&](const Permutation& y) { return q.contains(conjugate(x, y)); });
    });
    if (fixes_all) ++count;
  }
  return count;
}

struct SylowData {
  PermGroup sylow;
  PermGroup normalizer;
  Method method;
  std::vector<ConjugateSubgroup> orbit;
};

SylowData sylow_data(const PermGroup& g, std::uint64_t p, const Caps& caps) {
  PermGroup sylow = find_sylow(g, p, caps);
  Method method = Method::brute_force;
  PermGroup n = normalizer(g, sylow, caps, &method);
  std::vector<ConjugateSubgroup> orbit = conjugate_orbit(g, sylow, caps);
  const std::uint64_t index = g.order() / n.order();
  if (orbit.size() != index)
    throw Error("conjugate orbit of size " + std::to_string(orbit.size()) + " but normalizer index " +
                std::to_string(index));
  return {std::move(sylow), std::move(n), method, std::move(orbit)};
}

}  // namespace

PermGroup find_sylow(const PermGroup& g, std::uint64_t p, const Caps& caps, std::size_t skip) {
  if (!is_prime(p)) throw PreconditionFailed("find_sylow: " + std::to_string(p) + " is not prime");
  const std::uint64_t target = prime_power_part(g.order(), p);
  PermGroup current(g.degree());
  std::vector<Permutation> gens;
  while (current.order() < target) {
    PermGroup n = gens.empty() ? g : normalizer(g, current, caps);
    auto x = next_extension(n, current, p, caps, skip);
    if (!x) {
      if (gens.empty()) throw Error("find_sylow: seed offset beyond the available p-elements");
      throw Error("find_sylow: normalizer has no p-element outside P");
    }
    gens.push_back(*x);
    current = PermGroup(g.degree(), gens);
  }
  return current;
}

bool ConjugateSubgroup::contains(const Permutation& x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

std::vector<ConjugateSubgroup> conjugate_orbit(const PermGroup& g, const PermGroup& h, const Caps& caps) {
  std::vector<ConjugateSubgroup> orbit{{enumerate_elements(h, caps.elements), h.generators()}};
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen{{orbit.front().elements, 0}};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Permutation& x : g.generators()) {
      const Permutation xi = inverse(x);
      ConjugateSubgroup next;
      next.elements.reserve(orbit[i].elements.size());
      for (const Permutation& y : orbit[i].elements) next.elements.push_back(compose(compose(x, y), xi));
      std::sort(next.elements.begin(), next.elements.end());
      if (seen.count(next.elements)) continue;
      if (orbit.size() >= caps.orbit) throw OrbitCapExceeded(caps.orbit, "");
      for (const Permutation& y : orbit[i].generators) next.generators.push_back(conjugate(x, y));
      seen.emplace(next.elements, orbit.size());
      orbit.push_back(std::move(next));
    }
  }
  return orbit;
}

SylowReport count_sylow(const PermGroup& g, std::uint64_t p, const Caps& caps) {
  SylowData d = sylow_data(g, p, caps);
  SylowReport r;
  r.p = p;
  r.sylow_order = d.sylow.order();
  r.normalizer_order = d.normalizer.order();
  r.count = g.order() / r.normalizer_order;
  r.normalizer_method = d.method;
  r.orbit_size = d.orbit.size();
  r.p_core_order = intersect(d.orbit).size();
  r.action_kernel_order = conjugation_kernel_order(d.normalizer, d.orbit, caps);
  return r;
}

PCoreKernel p_core_and_kernel(const PermGroup& g, std::uint64_t p, const Caps& caps) {
  SylowData d = sylow_data(g, p, caps);
  ActionImage action = coset_action(g, d.normalizer, caps);
  PermGroup core = subgroup_from_elements(g.degree(), intersect(d.orbit));
  PCoreKernel out{core, action.kernel};
  out.count = d.orbit.size();
  out.quotient_count = count_sylow(action.image, p, caps).count;
  out.conjugation_kernel_order = conjugation_kernel_order(d.normalizer, d.orbit, caps);
  out.p_core_in_kernel = core.is_subgroup_of(action.kernel);
  return out;
}

std::variant<BrodkeyPair, NotAbelianSylow> brodkey_pair(const PermGroup& g, std::uint64_t p, const Caps& caps) {
  PermGroup sylow = find_sylow(g, p, caps);
  if (!sylow.is_abelian()) return NotAbelianSylow{};
  std::vector<ConjugateSubgroup> orbit = conjugate_orbit(g, sylow, caps);
  const auto& first = orbit.front().elements;
  std::size_t best = 0;
  std::uint64_t best_size = first.size();
  for (std::size_t i = 1; i < orbit.size(); ++i) {
    std::vector<Permutation> common;
    std::set_intersection(first.begin(), first.end(), orbit[i].elements.begin(), orbit[i].elements.end(),
                          std::back_inserter(common));
    if (common.size() < best_size) {
      best_size = common.size();
      best = i;
    }
  }
  BrodkeyPair pair{sylow, PermGroup(g.degree(), orbit[best].generators)};
  pair.intersection_order = best_size;
  pair.p_core_order = intersect(orbit).size();
  return pair;
}

CentaltResult verify_centalt(std::uint64_t p, const Caps& caps) {
  if (p < 3 || !is_prime(p)) throw PreconditionFailed("verify_centalt: p = " + std::to_string(p) + " is not an odd prime");
  const std::size_t degree = 2 * p;
  if (degree > caps.degree) throw PreconditionFailed("verify_centalt: degree " + std::to_string(degree) + " above the degree cap");
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < p; ++i) {
    images[i] = static_cast<Point>((i + 1) % p);
    images[p + i] = static_cast<Point>(p + (i + 1) % p);
  }
  const Permutation sigma = Permutation::from_images(std::move(images));
  CentaltResult r;
  r.p = p;
  r.order = centralizer(alternating_group(degree), sigma, caps, &r.method).order();
  r.symmetric_order = centralizer(symmetric_group(degree), sigma, caps).order();
  r.pass = r.order == p * p;
  return r;
}

NcResult nc_check(const PermGroup& g, std::uint64_t p, const Caps& caps) {
  PermGroup sylow = find_sylow(g, p, caps);
  if (sylow.order() != p)
    throw PreconditionFailed("SylowNotPrimeOrder: Sylow " + std::to_string(p) + "-subgroup has order " +
                             std::to_string(sylow.order()));
  PermGroup n = normalizer(g, sylow, caps);
  PermGroup c = centralizer(n, sylow.generators().front(), caps);
  NcResult r;
  r.normalizer_order = n.order();
  r.centralizer_order = c.order();
  r.nc_order = r.normalizer_order / r.centralizer_order;
  ActionImage action = coset_action(n, c, caps);
  for (const Permutation& x : enumerate_elements(action.image, caps.elements)) {
    if (element_order(x) == r.nc_order) {
      r.is_cyclic = true;
      break;
    }
  }
  r.divides_p_minus_1 = (p - 1) % r.nc_order == 0;
  return r;
}

std::variant<PermGroup, NotCyclicSylow2> cyc2_complement(const PermGroup& g, const Caps& caps) {
  const std::uint64_t order = g.order();
  PermGroup sylow = find_sylow(g, 2, caps);
  if (!sylow.is_cyclic()) return NotCyclicSylow2{};
  if (order > caps.regular) throw CapExceeded("cyc2_complement: regular representation", caps.regular, order);
  std::vector<Permutation> h = enumerate_elements(g, caps.regular);
  std::vector<char> visited;
  for (unsigned step = valuation(order, 2); step > 0; --step) {
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
    for (std::uint32_t i = 0; i < h.size(); ++i) index.emplace(h[i], i);
    std::vector<std::uint32_t> image(h.size());
    std::vector<Permutation> even;
    for (const Permutation& x : h) {
      for (std::uint32_t i = 0; i < h.size(); ++i) image[i] = index.at(compose(x, h[i]));
      visited.assign(h.size(), 0);
      std::size_t cycle_count = 0;
      for (std::uint32_t i = 0; i < h.size(); ++i) {
        if (visited[i]) continue;
        ++cycle_count;
        for (std::uint32_t j = i; !visited[j]; j = image[j]) visited[j] = 1;
      }
      if ((h.size() - cycle_count) % 2 == 0) even.push_back(x);
    }
    if (even.size() * 2 != h.size()) throw Error("cyc2_complement: even part is not of index 2");
    h = std::move(even);
  }
  return subgroup_from_elements(g.degree(), h);
}

const char* uniqueness_name(Uniqueness u) {
  switch (u) {
    case Uniqueness::verified: return "unique";
    case Uniqueness::violated: return "not-unique";
    default: return "unchecked";
  }
}

std::variant<Cyc2Verification, NotCyclicSylow2> verify_cyc2(const PermGroup& g, const Caps& caps,
                                                            std::uint64_t envelope) {
  auto result = cyc2_complement(g, caps);
  if (std::holds_alternative<NotCyclicSylow2>(result)) return NotCyclicSylow2{};
  Cyc2Verification v{std::get<PermGroup>(result)};
  const std::uint64_t order = g.order();
  v.sylow2_order = prime_power_part(order, 2);
  v.index = order / v.complement.order();
  v.normal = is_normal(g, v.complement);
  if (order <= envelope) {
    std::size_t normal_count = 0;
    bool found = false;
    for (const PermGroup& s : subgroups_of_order(g, v.complement.order(), caps)) {
      if (!is_normal(g, s)) continue;
      ++normal_count;
      found = found || same_subgroup(s, v.complement);
    }
    v.uniqueness = normal_count == 1 && found ? Uniqueness::verified : Uniqueness::violated;
  }
  return v;
}

std::vector<FrobeniusRow> frobenius_counts(const PermGroup& g, std::uint64_t p, const Caps& caps) {
  if (!is_prime(p)) throw PreconditionFailed("frobenius_counts: " + std::to_string(p) + " is not prime");
  const std::uint64_t order = g.order();
  const unsigned v = valuation(order, p);
  std::vector<FrobeniusRow> rows;
  std::uint64_t pa = 1;
  for (unsigned a = 1; a <= v; ++a) {
    pa *= p;
    FrobeniusRow row;
    row.a = a;
    row.count = subgroups_of_order(g, pa, caps).size();
    row.mod_p_ok = row.count % p == 1;
    if (a < v) row.mod_p2_class = frobenius_pseudo_filter(row.count, p);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sylowbench
