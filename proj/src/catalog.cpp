#include "sylowbench/catalog.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "sylowbench/arith.hpp"
#include "sylowbench/errors.hpp"

namespace sylowbench {

namespace {

constexpr std::size_t kMaxDegree = 5000;
constexpr std::size_t kMaxFactorial = 20;  // 20! still fits in 64 bits

void check_range(std::string_view family, std::uint64_t value, std::uint64_t lo, std::uint64_t hi) {
  if (value < lo || value > hi)
    throw CatalogError(std::string(family) + ": parameter " + std::to_string(value) + " outside [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]",
                       0);
}

Permutation cycle_perm(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < length; ++i) images[first + i] = static_cast<Point>(first + (i + 1) % length);
  return Permutation::from_images(std::move(images));
}

Permutation shifted(const Permutation& g, std::size_t offset, std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < g.degree(); ++i) images[offset + i] = static_cast<Point>(offset + g(static_cast<Point>(i)));
  return Permutation::from_images(std::move(images));
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  PermGroup parse() {
    PermGroup g = group();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw CatalogError("group spec '" + std::string(text_) + "': " + what + " at position " + std::to_string(pos_), 0);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a family name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t number() {
    skip_space();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::uint64_t single_number_arg() {
    expect('(');
    std::uint64_t n = number();
    expect(')');
    return n;
  }

  PermGroup group() {
    const std::string name = identifier();
    if (name == "dodecahedral") return dodecahedral_group();
    if (name == "cyclic") return cyclic_group(single_number_arg());
    if (name == "dihedral") return dihedral_group(single_number_arg());
    if (name == "symmetric") return symmetric_group(single_number_arg());
    if (name == "alternating") return alternating_group(single_number_arg());
    if (name == "elementary_abelian" || name == "affine") {
      expect('(');
      std::uint64_t a = number();
      expect(',');
      std::uint64_t b = number();
      expect(')');
      return name == "affine" ? affine_group(a, b) : elementary_abelian_group(a, b);
    }
    if (name == "direct_product") {
      expect('(');
      PermGroup a = group();
      expect(',');
      PermGroup b = group();
      expect(')');
      return direct_product(a, b);
    }
    throw CatalogError("unknown group family '" + name + "'", 0);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto at = s.find(sep);
    out.push_back(trim(s.substr(0, at)));
    if (at == std::string_view::npos) break;
    s = s.substr(at + 1);
  }
  return out;
}

std::uint64_t parse_positive(std::string_view s, const char* what, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value == 0)
    throw CatalogError(std::string(what) + " must be a positive integer, got '" + std::string(s) + "'", line);
  return value;
}

}  // namespace

PermGroup cyclic_group(std::size_t n) {
  check_range("cyclic", n, 1, kMaxDegree);
  if (n == 1) return PermGroup(1);
  return PermGroup(n, {cycle_perm(n, 0, n)});
}

PermGroup dihedral_group(std::size_t n) {
  check_range("dihedral", n, 3, kMaxDegree);
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {cycle_perm(n, 0, n), Permutation::from_images(std::move(images))});
}

PermGroup symmetric_group(std::size_t n) {
  check_range("symmetric", n, 1, kMaxFactorial);
  if (n == 1) return PermGroup(1);
  return PermGroup(n, {cycle_perm(n, 0, n), cycle_perm(n, 0, 2)});
}

PermGroup alternating_group(std::size_t n) {
  check_range("alternating", n, 1, kMaxFactorial);
  if (n < 3) return PermGroup(n);
  if (n == 3) return PermGroup(3, {cycle_perm(3, 0, 3)});
  Permutation long_cycle = n % 2 == 1 ? cycle_perm(n, 0, n) : cycle_perm(n, 1, n - 1);
  return PermGroup(n, {cycle_perm(n, 0, 3), long_cycle});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t degree = a.degree() + b.degree();
  check_range("direct_product", degree, 2, kMaxDegree);
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators()) gens.push_back(shifted(g, 0, degree));
  for (const Permutation& g : b.generators()) gens.push_back(shifted(g, a.degree(), degree));
  return PermGroup(degree, std::move(gens));
}

PermGroup elementary_abelian_group(std::uint64_t p, std::size_t k) {
  if (!is_prime(p)) throw CatalogError("elementary_abelian: " + std::to_string(p) + " is not prime", 0);
  check_range("elementary_abelian", k, 1, 63);
  check_range("elementary_abelian", p * k, 2, kMaxDegree);
  const std::size_t degree = p * k;
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(cycle_perm(degree, i * p, p));
  return PermGroup(degree, std::move(gens));
}

PermGroup affine_group(std::uint64_t q, std::uint64_t k) {
  if (!is_prime(q)) throw CatalogError("affine: " + std::to_string(q) + " is not prime", 0);
  check_range("affine", q, 2, kMaxDegree);
  if (k == 0 || (q - 1) % k != 0)
    throw CatalogError("affine: " + std::to_string(k) + " does not divide " + std::to_string(q - 1), 0);
  std::vector<Permutation> gens{cycle_perm(q, 0, q)};
  if (k > 1) {
    // a generator g of (Z/q)^*, then a = g^((q-1)/k) has order k
    std::uint64_t g = 2;
    for (;; ++g) {
      bool primitive = true;
      for (const PrimePower& f : factorize(q - 1)) {
        std::uint64_t x = 1;
        for (std::uint64_t e = 0; e < (q - 1) / f.prime; ++e) x = x * g % q;
        if (x == 1) primitive = false;
      }
      if (primitive) break;
    }
    std::uint64_t a = 1;
    for (std::uint64_t e = 0; e < (q - 1) / k; ++e) a = a * g % q;
    std::vector<Point> images(q);
    for (std::uint64_t x = 0; x < q; ++x) images[x] = static_cast<Point>(a * x % q);
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return PermGroup(q, std::move(gens));
}

PermGroup dodecahedral_group() { return direct_product(alternating_group(5), cyclic_group(2)); }

PermGroup builtin(std::string_view spec) { return SpecParser(spec).parse(); }

const std::vector<NamedGroup>& builtin_catalog() {
  static const std::vector<NamedGroup> catalog = [] {
    const char* specs[] = {
        "cyclic(1)",
        "cyclic(2)",
        "elementary_abelian(2,2)",
        "cyclic(6)",
        "dihedral(3)",
        "cyclic(8)",
        "dihedral(4)",
        "elementary_abelian(2,3)",
        "cyclic(9)",
        "elementary_abelian(3,2)",
        "cyclic(12)",
        "dihedral(6)",
        "alternating(4)",
        "dihedral(7)",
        "elementary_abelian(2,4)",
        "affine(5,4)",
        "affine(7,3)",
        "symmetric(4)",
        "elementary_abelian(5,2)",
        "dihedral(15)",
        "direct_product(cyclic(3),alternating(4))",
        "direct_product(dihedral(5),cyclic(4))",
        "affine(7,6)",
        "direct_product(affine(7,3),cyclic(2))",
        "affine(11,5)",
        "alternating(5)",
        "dodecahedral",
        "symmetric(5)",
        "direct_product(symmetric(4),symmetric(3))",
        "affine(23,11)",
        "alternating(6)",
        "symmetric(6)",
        "alternating(7)",
        "direct_product(alternating(5),alternating(5))",
        "symmetric(7)",
        "direct_product(alternating(7),cyclic(3))",
    };
    std::vector<NamedGroup> out;
    for (const char* s : specs) out.push_back({s, builtin(s)});
    return out;
  }();
  return catalog;
}

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto fields = split(line, ';');
    if (fields.size() != 3 && fields.size() != 4)
      throw CatalogError("expected 'name ; degree ; generators [; order]'", line_no);
    CatalogEntry entry;
    entry.name = std::string(fields[0]);
    if (entry.name.empty()) throw CatalogError("empty group name", line_no);
    entry.degree = parse_positive(fields[1], "degree", line_no);
    if (entry.degree > kMaxDegree) throw CatalogError("degree above " + std::to_string(kMaxDegree), line_no);
    if (!fields[2].empty())
      for (std::string_view gen : split(fields[2], ',')) entry.generators.emplace_back(gen);
    if (fields.size() == 4) entry.expected_order = parse_positive(fields[3], "order", line_no);
    if (!names.insert(entry.name).second) throw CatalogError("duplicate group name '" + entry.name + "'", line_no);

    try {
      PermGroup g = entry_group(entry);
      if (entry.expected_order && g.order() != *entry.expected_order)
        throw CatalogError("group '" + entry.name + "' has order " + std::to_string(g.order()) + ", expected " +
                               std::to_string(*entry.expected_order),
                           line_no);
    } catch (const CatalogError&) {
      throw;
    } catch (const Error& e) {
      throw CatalogError(e.what(), line_no);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

PermGroup entry_group(const CatalogEntry& entry) {
  std::vector<Permutation> gens;
  for (const std::string& g : entry.generators) gens.push_back(parse_cycles(g, entry.degree));
  return PermGroup(entry.degree, std::move(gens));
}

NamedGroup resolve_group(std::string_view ref) {
  constexpr std::string_view kBuiltin = "builtin:";
  constexpr std::string_view kFile = "file:";
  if (ref.starts_with(kBuiltin)) {
    std::string spec(ref.substr(kBuiltin.size()));
    return {spec, builtin(spec)};
  }
  if (ref.starts_with(kFile)) {
    std::string_view rest = ref.substr(kFile.size());
    auto colon = rest.rfind(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == rest.size())
      throw UsageError("group reference '" + std::string(ref) + "' must look like file:<path>:<name>");
    std::string path(rest.substr(0, colon));
    std::string name(rest.substr(colon + 1));
    std::ifstream in(path);
    if (!in) throw IoError("cannot open catalog file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    for (const CatalogEntry& e : parse_catalog(buf.str()))
      if (e.name == name) return {name, entry_group(e)};
    throw UsageError("no group named '" + name + "' in " + path);
  }
  throw UsageError("group reference '" + std::string(ref) + "' must start with builtin: or file:");
}

}  // namespace sylowbench
