#include "sylowbench/group.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "sylowbench/errors.hpp"

namespace sylowbench {

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                                 std::span<const Point> base_prefix)
    : degree_(degree) {
  for (Point b : base_prefix) {
    if (b >= degree) throw Error("base point " + std::to_string(b + 1) + " outside the domain");
    for (const Level& l : levels_)
      if (l.base == b) throw Error("repeated base point " + std::to_string(b + 1));
    append_level(b);
  }

  std::vector<Permutation> gens;
  for (const Permutation& g : generators) {
    if (g.degree() != degree)
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                           std::to_string(degree));
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }

  for (const Permutation& g : gens) {
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(), [&](const Level& l) { return g(l.base) == l.base; });
    if (fixes_base) append_level(g.first_moved_point());
  }

  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const Permutation& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < l && fixes_prefix; ++j) fixes_prefix = g(levels_[j].base) == levels_[j].base;
      if (fixes_prefix) levels_[l].generators.push_back(g);
    }
    rebuild_orbit(levels_[l]);
  }

  schreier_sims();
}

void StabilizerChain::append_level(Point base) {
  Level level;
  level.base = base;
  levels_.push_back(std::move(level));
  rebuild_orbit(levels_.back());
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base);
  level.orbit_index.assign(degree_, -1);
  level.orbit_index[level.base] = 0;
  level.transversal.assign(1, Permutation(degree_));
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point x = level.orbit[i];
    for (const Permutation& g : level.generators) {
      Point y = g(x);
      if (level.orbit_index[y] >= 0) continue;
      level.orbit_index[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(compose(g, level.transversal[i]));
    }
  }
}

void StabilizerChain::schreier_sims() {
  // Classic deterministic Schreier-Sims: verify each level's Schreier
  // generators sift through the levels below; a non-sifting residue becomes
  // a new strong generator and processing resumes at the deepest level it
  // was added to.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !restarted; ++oi) {
      const Point beta = levels_[li].orbit[oi];
      for (std::size_t gi = 0; gi < levels_[li].generators.size(); ++gi) {
        const Permutation& gen = levels_[li].generators[gi];
        const Permutation& u_beta = levels_[li].transversal[oi];
        const Permutation& u_image = levels_[li].transversal[levels_[li].orbit_index[gen(beta)]];
        Permutation moved = compose(gen, u_beta);
        if (moved == u_image) continue;
        Permutation schreier = compose(inverse(u_image), moved);
        auto [residue, stop] = sift(schreier, li + 1);
        if (stop == levels_.size()) {
          if (residue.is_identity()) continue;
          append_level(residue.first_moved_point());
        }
        for (std::size_t l = li + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const Level& l : levels_) out.push_back(l.base);
  return out;
}

std::uint64_t StabilizerChain::order() const { return order_from(0); }

std::uint64_t StabilizerChain::order_from(std::size_t level) const {
  std::uint64_t order = 1;
  for (std::size_t l = level; l < levels_.size(); ++l) {
    std::uint64_t k = levels_[l].orbit.size();
    if (order > UINT64_MAX / k) throw Error("group order exceeds 64-bit range");
    order *= k;
  }
  return order;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation& g, std::size_t from_level) const {
  Permutation h = g;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    std::int32_t idx = level.orbit_index[h(level.base)];
    if (idx < 0) return {h, l};
    h = compose(inverse(level.transversal[static_cast<std::size_t>(idx)]), h);
  }
  return {h, levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = sift(g);
  return stop == levels_.size() && residue.is_identity();
}

const std::vector<Permutation>& StabilizerChain::level_generators(std::size_t level) const {
  return levels_.at(level).generators;
}

std::span<const Point> StabilizerChain::basic_orbit(std::size_t level) const { return levels_.at(level).orbit; }

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const Level& l : levels_)
    for (const Permutation& g : l.generators)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::Cache {
  std::mutex mutex;
  std::shared_ptr<const StabilizerChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<Cache>()) {
  if (degree == 0) throw Error("degree must be positive");
  for (Permutation& g : generators) {
    if (g.degree() != degree)
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                           std::to_string(degree));
    if (g.is_identity() || std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    generators_.push_back(std::move(g));
  }
}

const StabilizerChain& PermGroup::chain() const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->chain) return *cache_->chain;
  }
  auto built = std::make_shared<const StabilizerChain>(degree_, generators_);
  std::lock_guard lock(cache_->mutex);
  if (!cache_->chain) cache_->chain = std::move(built);
  return *cache_->chain;
}

bool PermGroup::contains(const Permutation& g) const { return chain().contains(g); }

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(), [&](const Permutation& g) { return other.contains(g); });
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (compose(generators_[i], generators_[j]) != compose(generators_[j], generators_[i])) return false;
  return true;
}

bool PermGroup::is_cyclic() const {
  if (!is_abelian()) return false;
  const std::uint64_t n = order();
  // An abelian group is cyclic iff some element has order |G|; it is enough
  // to look at the closure since abelian groups here are small.
  for (const Permutation& x : enumerate_elements(*this, Caps{}.elements))
    if (element_order(x) == n) return true;
  return false;
}

bool same_subgroup(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.is_subgroup_of(b);
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  for (const Permutation& x : g.generators())
    for (const Permutation& y : h.generators())
      if (!h.contains(conjugate(x, y))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Elements

std::vector<Permutation> enumerate_elements(const PermGroup& g, std::uint64_t cap) {
  std::vector<Permutation> list{Permutation(g.degree())};
  std::unordered_set<Permutation, PermutationHash> seen{list.front()};
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (const Permutation& gen : g.generators()) {
      Permutation y = compose(gen, list[i]);
      if (!seen.insert(y).second) continue;
      list.push_back(std::move(y));
      if (list.size() > cap) throw CapExceeded("element enumeration", cap, list.size());
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

std::uint64_t group_order(const PermGroup& g) { return g.order(); }

PermGroup subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  PermGroup h(degree);
  for (const Permutation& e : elements) {
    if (h.order() >= elements.size()) break;
    if (h.contains(e)) continue;
    gens.push_back(e);
    h = PermGroup(degree, gens);
  }
  if (h.order() != elements.size()) throw Error("element list is not closed under composition");
  return h;
}

// ---------------------------------------------------------------------------
// Orbits and stabilizers

OrbitStabilizer orbit_and_stabilizer(const PermGroup& g, Point point) {
  if (point >= g.degree()) throw Error("point " + std::to_string(point + 1) + " outside the domain");
  std::vector<Point> orbit{point};
  std::vector<bool> seen(g.degree(), false);
  seen[point] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const Permutation& gen : g.generators()) {
      Point y = gen(orbit[i]);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  std::sort(orbit.begin(), orbit.end());

  // The strong generators below the first level of a chain whose base
  // starts at `point` generate its stabilizer.
  const Point prefix[] = {point};
  StabilizerChain chain(g.degree(), g.generators(), prefix);
  std::vector<Permutation> gens;
  if (chain.length() > 1) gens = chain.level_generators(1);
  return {std::move(orbit), PermGroup(g.degree(), std::move(gens))};
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(g.degree(), false);
  for (Point p = 0; p < g.degree(); ++p) {
    if (seen[p]) continue;
    std::vector<Point> orbit{p};
    seen[p] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const Permutation& gen : g.generators()) {
        Point y = gen(orbit[i]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

const char* method_name(Method m) { return m == Method::brute_force ? "brute-force" : "orbit-stabilizer"; }

namespace {

using ElementSet = std::vector<Permutation>;  // sorted

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = 0;
    PermutationHash ph;
    for (const Permutation& p : s) h = h * 1000003U ^ ph(p);
    return h;
  }
};

ElementSet conjugate_set(const Permutation& g, const ElementSet& s) {
  const Permutation gi = inverse(g);
  ElementSet out;
  out.reserve(s.size());
  for (const Permutation& x : s) out.push_back(compose(compose(g, x), gi));
  std::sort(out.begin(), out.end());
  return out;
}

// Stabilizer of `start` under an action of G, from Schreier generators over
// the explicitly enumerated orbit. Stops once the stabilizer reaches
// |G| / |orbit|.
template <class Obj, class Hash, class Act>
PermGroup stabilizer_by_orbit(const PermGroup& g, const Obj& start, Act act, std::uint64_t cap,
                              const std::string& required) {
  const auto& gens = g.generators();
  const std::size_t degree = g.degree();
  std::vector<Obj> orbit{start};
  std::unordered_map<Obj, std::uint32_t, Hash> index{{start, 0}};
  std::vector<std::pair<std::int64_t, std::int64_t>> parent{{-1, -1}};
  std::vector<std::uint32_t> edge;  // edge[i * |gens| + k] = index of gens[k] . orbit[i]
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Obj y = act(gens[k], orbit[i]);
      auto it = index.find(y);
      if (it == index.end()) {
        if (orbit.size() >= cap) throw OrbitCapExceeded(cap, required);
        it = index.emplace(y, static_cast<std::uint32_t>(orbit.size())).first;
        orbit.push_back(std::move(y));
        parent.emplace_back(static_cast<std::int64_t>(i), static_cast<std::int64_t>(k));
      }
      edge.push_back(it->second);
    }
  }

  auto transversal = [&](std::size_t i) {
    std::vector<std::size_t> path;
    for (std::int64_t at = static_cast<std::int64_t>(i); parent[static_cast<std::size_t>(at)].first >= 0;
         at = parent[static_cast<std::size_t>(at)].first)
      path.push_back(static_cast<std::size_t>(parent[static_cast<std::size_t>(at)].second));
    Permutation t(degree);
    for (auto it = path.rbegin(); it != path.rend(); ++it) t = compose(gens[*it], t);
    return t;
  };

  const std::uint64_t target = g.order() / orbit.size();
  std::vector<Permutation> stab_gens;
  PermGroup stab(degree);
  for (std::size_t i = 0; i < orbit.size() && stab.order() < target; ++i) {
    const Permutation t_i = transversal(i);
    for (std::size_t k = 0; k < gens.size() && stab.order() < target; ++k) {
      const std::size_t j = edge[i * gens.size() + k];
      if (parent[j].first == static_cast<std::int64_t>(i) && parent[j].second == static_cast<std::int64_t>(k)) continue;
      Permutation s = compose(inverse(transversal(j)), compose(gens[k], t_i));
      if (s.is_identity() || stab.contains(s)) continue;
      stab_gens.push_back(std::move(s));
      stab = PermGroup(degree, stab_gens);
    }
  }
  if (stab.order() != target) throw Error("Schreier generators did not reach the stabilizer order");
  return stab;
}

std::uint64_t factorial_or_zero(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > UINT64_MAX / i) return 0;
    f *= i;
  }
  return f;
}

// Conjugacy class size of s in G when G is the full symmetric or
// alternating group on its domain; empty when unknown.
std::string known_class_size(const PermGroup& g, const Permutation& s) {
  const std::uint64_t n_fact = factorial_or_zero(g.degree());
  if (n_fact == 0 || g.degree() < 2) return {};
  std::uint64_t order = 0;
  try {
    order = g.order();
  } catch (const Error&) {
    return {};
  }
  if (order == n_fact) return symmetric_class_size(s);
  bool all_even = std::all_of(g.generators().begin(), g.generators().end(),
                              [](const Permutation& x) { return parity(x) == Parity::even; });
  if (order != n_fact / 2 || !all_even) return {};
  // The S_n class splits in A_n iff the cycle lengths (with fixed points)
  // are distinct and odd.
  std::map<std::size_t, std::size_t> lengths;
  std::size_t moved = 0;
  for (const auto& c : cycles(s).cycles) {
    ++lengths[c.size()];
    moved += c.size();
  }
  if (g.degree() > moved) lengths[1] += g.degree() - moved;
  bool splits = std::all_of(lengths.begin(), lengths.end(),
                            [](const auto& kv) { return kv.first % 2 == 1 && kv.second == 1; });
  std::string size = symmetric_class_size(s);
  if (!splits) return size;
  // halve the decimal string
  std::string out;
  unsigned carry = 0;
  for (char c : size) {
    unsigned cur = carry * 10 + static_cast<unsigned>(c - '0');
    out.push_back(static_cast<char>('0' + cur / 2));
    carry = cur % 2;
  }
  out.erase(0, std::min(out.find_first_not_of('0'), out.size() - 1));
  return out;
}

bool decimal_less_or_equal(const std::string& a, std::uint64_t b) {
  std::string bs = std::to_string(b);
  if (a.size() != bs.size()) return a.size() < bs.size();
  return a <= bs;
}

}  // namespace

std::string symmetric_class_size(const Permutation& s) {
  // n! / prod_k (k^{m_k} m_k!) with a small base-1e9 bignum.
  std::vector<std::uint64_t> digits{1};
  auto mul = [&](std::uint64_t f) {
    std::uint64_t carry = 0;
    for (auto& d : digits) {
      std::uint64_t cur = d * f + carry;
      d = cur % 1000000000ULL;
      carry = cur / 1000000000ULL;
    }
    while (carry) {
      digits.push_back(carry % 1000000000ULL);
      carry /= 1000000000ULL;
    }
  };
  auto div = [&](std::uint64_t f) {
    std::uint64_t rem = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      std::uint64_t cur = rem * 1000000000ULL + *it;
      *it = cur / f;
      rem = cur % f;
    }
    while (digits.size() > 1 && digits.back() == 0) digits.pop_back();
  };
  const std::size_t n = s.degree();
  for (std::size_t i = 2; i <= n; ++i) mul(i);
  std::map<std::size_t, std::size_t> lengths;
  std::size_t moved = 0;
  for (const auto& c : cycles(s).cycles) {
    ++lengths[c.size()];
    moved += c.size();
  }
  lengths[1] += n - moved;
  for (const auto& [len, mult] : lengths) {
    for (std::size_t i = 0; i < mult; ++i) div(len);
    for (std::size_t i = 2; i <= mult; ++i) div(i);
  }
  std::string out = std::to_string(digits.back());
  for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it) {
    std::string part = std::to_string(*it);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

PermGroup centralizer(const PermGroup& g, const Permutation& s, const Caps& caps, Method* used) {
  if (s.degree() != g.degree())
    throw DegreeMismatch("centralizer: permutation degree " + std::to_string(s.degree()) + " vs group degree " +
                         std::to_string(g.degree()));
  if (g.order() <= caps.elements) {
    if (used) *used = Method::brute_force;
    std::vector<Permutation> kept;
    for (const Permutation& x : enumerate_elements(g, caps.elements))
      if (compose(x, s) == compose(s, x)) kept.push_back(x);
    return subgroup_from_elements(g.degree(), kept);
  }
  if (used) *used = Method::orbit_stabilizer;
  std::string required = known_class_size(g, s);
  if (!required.empty() && !decimal_less_or_equal(required, caps.orbit)) throw OrbitCapExceeded(caps.orbit, required);
  return stabilizer_by_orbit<Permutation, PermutationHash>(
      g, s, [](const Permutation& x, const Permutation& y) { return conjugate(x, y); }, caps.orbit, required);
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h, const Caps& caps, Method* used) {
  if (!h.is_subgroup_of(g)) throw NotASubgroup("normalizer: H is not a subgroup of G");
  if (g.order() <= caps.elements) {
    if (used) *used = Method::brute_force;
    std::vector<Permutation> kept;
    for (const Permutation& x : enumerate_elements(g, caps.elements)) {
      bool normalizes = std::all_of(h.generators().begin(), h.generators().end(),
                                    [&](const Permutation& y) { return h.contains(conjugate(x, y)); });
      if (normalizes) kept.push_back(x);
    }
    return subgroup_from_elements(g.degree(), kept);
  }
  if (used) *used = Method::orbit_stabilizer;
  ElementSet start = enumerate_elements(h, caps.elements);
  return stabilizer_by_orbit<ElementSet, ElementSetHash>(g, start, conjugate_set, caps.orbit, "");
}

// ---------------------------------------------------------------------------
// Coset action

ActionImage coset_action(const PermGroup& g, const PermGroup& h, const Caps& caps) {
  if (!h.is_subgroup_of(g)) throw NotASubgroup("coset_action: H is not a subgroup of G");
  const std::uint64_t index = g.order() / h.order();
  if (index > caps.degree) throw IndexCapExceeded(caps.degree, index);

  const std::vector<Permutation> h_elements = enumerate_elements(h, caps.elements);
  const std::unordered_set<Permutation, PermutationHash> h_set(h_elements.begin(), h_elements.end());
  // Canonical representative of xH: its least element.
  auto canonical = [&](const Permutation& x) {
    Permutation best = compose(x, h_elements.front());
    for (std::size_t i = 1; i < h_elements.size(); ++i) {
      Permutation y = compose(x, h_elements[i]);
      if (y < best) best = std::move(y);
    }
    return best;
  };

  std::vector<Permutation> reps{Permutation(g.degree())};
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> where{{reps.front(), 0}};
  std::vector<std::vector<Point>> images(g.generators().size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      Permutation c = canonical(compose(g.generators()[k], reps[i]));
      auto it = where.find(c);
      if (it == where.end()) {
        it = where.emplace(c, static_cast<std::uint32_t>(reps.size())).first;
        reps.push_back(std::move(c));
      }
      images[k].push_back(it->second);
    }
  }
  if (reps.size() != index) throw Error("coset enumeration found " + std::to_string(reps.size()) + " cosets, expected " +
                                        std::to_string(index));

  std::vector<Permutation> image_gens;
  for (auto& im : images) image_gens.push_back(Permutation::from_images(std::move(im)));
  PermGroup image(static_cast<std::size_t>(index), std::move(image_gens));

  // h acts trivially iff r^-1 h r lies in H for every representative r.
  std::vector<Permutation> rep_inverses;
  for (const Permutation& r : reps) rep_inverses.push_back(inverse(r));
  std::vector<Permutation> kernel_elements;
  for (const Permutation& x : h_elements) {
    bool trivial = true;
    for (std::size_t i = 0; i < reps.size() && trivial; ++i)
      trivial = h_set.count(compose(rep_inverses[i], compose(x, reps[i]))) > 0;
    if (trivial) kernel_elements.push_back(x);
  }
  PermGroup kernel = subgroup_from_elements(g.degree(), kernel_elements);
  return {std::move(image), std::move(kernel), std::move(reps)};
}

// ---------------------------------------------------------------------------
// Subgroup search

namespace {

class ElementTable {
 public:
  explicit ElementTable(std::vector<Permutation> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<std::uint32_t>(i));
    const std::size_t n = elements_.size();
    if (n <= 2048) {
      table_.resize(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table_[i * n + j] = lookup(compose(elements_[i], elements_[j]));
    }
  }

  std::size_t size() const { return elements_.size(); }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[a * elements_.size() + b];
    return lookup(compose(elements_[a], elements_[b]));
  }

 private:
  std::uint32_t lookup(const Permutation& p) const { return index_.at(p); }

  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::uint32_t> table_;
};

struct IndexSubgroup {
  std::vector<std::uint32_t> elements;  // sorted
  std::vector<std::uint32_t> generators;
};

// Closure of `base` together with x, or nothing if it grows past `limit`.
std::optional<IndexSubgroup> extend(const ElementTable& t, const IndexSubgroup& base, std::uint32_t x,
                                    std::uint64_t limit) {
  IndexSubgroup out;
  out.generators = base.generators;
  out.generators.push_back(x);
  std::vector<char> in(t.size(), 0);
  std::vector<std::uint32_t> list = base.elements;
  for (std::uint32_t e : list) in[e] = 1;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::uint32_t s : out.generators) {
      std::uint32_t y = t.mul(list[i], s);
      if (in[y]) continue;
      in[y] = 1;
      list.push_back(y);
      if (list.size() > limit) return std::nullopt;
    }
  }
  std::sort(list.begin(), list.end());
  out.elements = std::move(list);
  return out;
}

}  // namespace

std::vector<PermGroup> subgroups_of_order(const PermGroup& g, std::uint64_t m, const Caps& caps) {
  const std::uint64_t order = g.order();
  if (m == 0 || order % m != 0)
    throw PreconditionFailed("NonDivisorOrder: " + std::to_string(m) + " does not divide |G| = " +
                             std::to_string(order));
  if (order > caps.subgroup_search) throw CapExceeded("subgroups_of_order", caps.subgroup_search, order);

  ElementTable t(enumerate_elements(g, caps.subgroup_search));
  const std::uint32_t identity = 0;  // the identity is the least element

  // One representative generator per cyclic subgroup whose order divides m.
  std::vector<std::uint32_t> cyclic_gens;
  std::set<std::vector<std::uint32_t>> cyclic_seen;
  std::set<std::vector<std::uint32_t>> found;
  std::deque<IndexSubgroup> work;

  IndexSubgroup trivial{{identity}, {}};
  found.insert(trivial.elements);
  work.push_back(trivial);
  for (std::uint32_t x = 1; x < t.size(); ++x) {
    if (m % element_order(t[x]) != 0) continue;
    auto c = extend(t, trivial, x, m);
    if (c && cyclic_seen.insert(c->elements).second) cyclic_gens.push_back(x);
  }

  std::vector<IndexSubgroup> hits;
  if (m == 1) hits.push_back(trivial);
  while (!work.empty()) {
    IndexSubgroup k = std::move(work.front());
    work.pop_front();
    if (k.elements.size() >= m) continue;
    std::vector<char> in(t.size(), 0);
    for (std::uint32_t e : k.elements) in[e] = 1;
    for (std::uint32_t x : cyclic_gens) {
      if (in[x]) continue;
      auto l = extend(t, k, x, m);
      if (!l || m % l->elements.size() != 0) continue;
      if (!found.insert(l->elements).second) continue;
      if (l->elements.size() == m) hits.push_back(*l);
      work.push_back(std::move(*l));
    }
  }

  std::sort(hits.begin(), hits.end(), [](const IndexSubgroup& a, const IndexSubgroup& b) { return a.elements < b.elements; });
  std::vector<PermGroup> out;
  for (const IndexSubgroup& s : hits) {
    std::vector<Permutation> gens;
    for (std::uint32_t x : s.generators) gens.push_back(t[x]);
    out.emplace_back(g.degree(), std::move(gens));
  }
  return out;
}

}  // namespace sylowbench
