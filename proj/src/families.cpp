#include "alliance/families.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "alliance/errors.hpp"

namespace alliance {

namespace {

struct KindInfo {
  FamilyKind kind;
  const char* name;
  int params;
};

constexpr KindInfo kKinds[] = {
    {FamilyKind::empty, "empty", 1},
    {FamilyKind::path, "path", 1},
    {FamilyKind::cycle, "cycle", 1},
    {FamilyKind::complete, "complete", 1},
    {FamilyKind::complete_bipartite, "complete_bipartite", 2},
    {FamilyKind::star, "star", 1},
    {FamilyKind::double_star, "double_star", 2},
    {FamilyKind::complete_minus_matching, "complete_minus_matching", 2},
};

const KindInfo& info_for(FamilyKind kind) {
  for (const auto& info : kKinds)
    if (info.kind == kind) return info;
  throw std::logic_error("unknown family kind");
}

// Empty string when valid, else the complaint.
std::string validate(const FamilySpec& s) {
  auto at_least = [&](int value, int bound, const char* what) -> std::string {
    if (value < bound)
      return std::string(info_for(s.kind).name) + ": " + what + " must be at least " +
             std::to_string(bound);
    return "";
  };
  switch (s.kind) {
    case FamilyKind::empty:
    case FamilyKind::complete:
      return at_least(s.p, 1, "vertex count");
    case FamilyKind::path:
      return at_least(s.p, 2, "vertex count");
    case FamilyKind::cycle:
      return at_least(s.p, 3, "vertex count");
    case FamilyKind::star:
      return at_least(s.p, 2, "vertex count");
    case FamilyKind::complete_bipartite: {
      auto e = at_least(s.p, 1, "first side");
      return e.empty() ? at_least(s.q, 1, "second side") : e;
    }
    case FamilyKind::double_star: {
      auto e = at_least(s.p, 3, "first star order");
      return e.empty() ? at_least(s.q, 3, "second star order") : e;
    }
    case FamilyKind::complete_minus_matching: {
      auto e = at_least(s.p, 3, "vertex count");
      if (!e.empty()) return e;
      if (s.q < 0 || s.q > s.p / 2)
        return "complete_minus_matching: matching size must be in [0, " +
               std::to_string(s.p / 2) + "]";
      return "";
    }
  }
  return "unknown family kind";
}

void require_valid(const FamilySpec& s) {
  std::string complaint = validate(s);
  if (!complaint.empty()) throw std::invalid_argument(complaint);
}

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw parse_error("family: bad integer \"" + std::string(text) + "\"");
  return value;
}

// Star on `order` vertices (center plus order-1 leaves): the center needs at
// least half its leaves inside, every leaf rides along.
Polynomial star_polynomial(int order) {
  int leaves = order - 1;
  Polynomial out;
  for (int i = (leaves + 1) / 2; i <= leaves; ++i)
    out += Polynomial::monomial(binomial(leaves, i), i + 1);
  return out;
}

// One side of the complete-bipartite product: sets of at least half the side.
Polynomial bipartite_side(int size) {
  Polynomial out;
  for (int i = (size + 1) / 2; i <= size; ++i)
    out += Polynomial::monomial(binomial(size, i), i);
  return out;
}

Polynomial complete_polynomial(int n) {
  Polynomial out;
  for (int k = (n + 2) / 2; k <= n; ++k) out += Polynomial::monomial(binomial(n, k), k);
  return out;
}

void add_into(std::vector<mpz_class>& acc, const std::vector<mpz_class>& v, int sign) {
  if (acc.size() < v.size()) acc.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += sign * v[i];
}

std::vector<mpz_class> convolve(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpz_class> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<mpz_class> to_vector(const Polynomial& p) {
  return {p.coeffs().begin(), p.coeffs().end()};
}

std::vector<mpz_class> monomial_vector(mpz_class c, int k) {
  std::vector<mpz_class> v(k + 1);
  v[k] = std::move(c);
  return v;
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw parse_error("family: expected \"kind:params\"");
  std::string_view name = text.substr(0, colon);
  std::string_view params = text.substr(colon + 1);
  FamilySpec spec;
  const KindInfo* info = nullptr;
  for (const auto& k : kKinds)
    if (name == k.name) info = &k;
  if (!info) throw parse_error("family: unknown kind \"" + std::string(name) + "\"");
  spec.kind = info->kind;
  auto comma = params.find(',');
  if (info->params == 1) {
    if (comma != std::string_view::npos)
      throw parse_error(std::string(info->name) + " takes one parameter");
    spec.p = parse_int(params);
  } else {
    if (comma == std::string_view::npos)
      throw parse_error(std::string(info->name) + " takes two comma-separated parameters");
    spec.p = parse_int(params.substr(0, comma));
    spec.q = parse_int(params.substr(comma + 1));
  }
  std::string complaint = validate(spec);
  if (!complaint.empty()) throw parse_error(complaint);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  const KindInfo& info = info_for(spec.kind);
  std::string out = std::string(info.name) + ":" + std::to_string(spec.p);
  if (info.params == 2) out += "," + std::to_string(spec.q);
  return out;
}

int family_order(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::complete_bipartite:
    case FamilyKind::double_star:
      return spec.p + spec.q;
    default:
      return spec.p;
  }
}

Graph family_graph(const FamilySpec& spec) {
  require_valid(spec);
  std::vector<Edge> edges;
  switch (spec.kind) {
    case FamilyKind::empty:
      break;
    case FamilyKind::path:
      for (int v = 0; v + 1 < spec.p; ++v) edges.emplace_back(v, v + 1);
      break;
    case FamilyKind::cycle:
      for (int v = 0; v + 1 < spec.p; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(spec.p - 1, 0);
      break;
    case FamilyKind::complete:
      for (int u = 0; u < spec.p; ++u)
        for (int v = u + 1; v < spec.p; ++v) edges.emplace_back(u, v);
      break;
    case FamilyKind::complete_bipartite:
      for (int u = 0; u < spec.p; ++u)
        for (int v = 0; v < spec.q; ++v) edges.emplace_back(u, spec.p + v);
      break;
    case FamilyKind::star:
      for (int v = 1; v < spec.p; ++v) edges.emplace_back(0, v);
      break;
    case FamilyKind::double_star:
      // Centers 0 and p joined by a bridge, leaves hanging off each.
      for (int v = 1; v < spec.p; ++v) edges.emplace_back(0, v);
      for (int v = 1; v < spec.q; ++v) edges.emplace_back(spec.p, spec.p + v);
      edges.emplace_back(0, spec.p);
      break;
    case FamilyKind::complete_minus_matching: {
      Graph complete = family_graph({FamilyKind::complete, spec.p, 0});
      std::vector<Edge> matching;
      for (int i = 0; i < spec.q; ++i) matching.emplace_back(2 * i, 2 * i + 1);
      return delete_edges(complete, matching);
    }
  }
  return Graph(family_order(spec), edges);
}

Polynomial family_polynomial(const FamilySpec& spec) {
  require_valid(spec);
  switch (spec.kind) {
    case FamilyKind::empty:
      return Polynomial::monomial(spec.p, 1);
    case FamilyKind::path: {
      Polynomial out;
      for (int i = 2; i <= spec.p; ++i) out += Polynomial::monomial(spec.p + 1 - i, i);
      return out;
    }
    case FamilyKind::cycle: {
      Polynomial out = Polynomial::monomial(1, spec.p);
      for (int i = 2; i <= spec.p - 1; ++i) out += Polynomial::monomial(spec.p, i);
      return out;
    }
    case FamilyKind::complete:
      return complete_polynomial(spec.p);
    case FamilyKind::complete_bipartite:
      return bipartite_side(spec.p) * bipartite_side(spec.q);
    case FamilyKind::star:
      return star_polynomial(spec.p);
    case FamilyKind::double_star:
      return Polynomial(double_star_coefficients(spec.p, spec.q, DoubleStarForm::corrected));
    case FamilyKind::complete_minus_matching:
      if (spec.p % 2 != 0)
        throw std::invalid_argument(
            "complete_minus_matching: no closed form for odd vertex counts");
      if (spec.q > spec.p / 2 - 1)
        throw std::invalid_argument(
            "complete_minus_matching: no closed form for a perfect matching");
      return complete_polynomial(spec.p);
  }
  throw std::logic_error("unknown family kind");
}

std::vector<mpz_class> double_star_coefficients(int r, int t, DoubleStarForm form) {
  FamilySpec spec{FamilyKind::double_star, r, t};
  require_valid(spec);
  auto star_vec = [](int order) { return to_vector(star_polynomial(order)); };
  // For even star order s, the cross term gains C(s-1, s/2-1) x^{s/2}; for
  // odd s that binomial has fractional lower index and drops to zero.
  auto even_extra = [](int s) {
    return s % 2 == 0 ? monomial_vector(binomial(s - 1, s / 2 - 1), s / 2)
                      : std::vector<mpz_class>{};
  };
  // For odd star order s, one alliance family is double-counted and gets
  // subtracted; the corrected exponent is (s+1)/2.
  auto odd_overlap = [&](int s) {
    if (s % 2 == 0) return std::vector<mpz_class>{};
    int exponent = form == DoubleStarForm::corrected ? (s + 1) / 2 : (s - 1) / 2;
    return monomial_vector(binomial(s - 1, (s - 1) / 2), exponent);
  };

  std::vector<mpz_class> left = star_vec(r);
  std::vector<mpz_class> right = star_vec(t);
  std::vector<mpz_class> cross_left = left;
  add_into(cross_left, even_extra(r), +1);
  std::vector<mpz_class> cross_right = right;
  add_into(cross_right, even_extra(t), +1);

  std::vector<mpz_class> out;
  add_into(out, left, +1);
  add_into(out, right, +1);
  add_into(out, odd_overlap(r), -1);
  add_into(out, odd_overlap(t), -1);
  add_into(out, convolve(cross_left, cross_right), +1);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string format_signed_coefficients(const std::vector<mpz_class>& coeffs) {
  int degree = static_cast<int>(coeffs.size()) - 1;
  while (degree >= 0 && coeffs[degree] == 0) --degree;
  if (degree < 0) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree; k >= 0; --k) {
    const mpz_class& c = coeffs[k];
    if (c == 0) continue;
    mpz_class magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (magnitude != 1 || k == 0) out << magnitude.get_str();
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

}  // namespace alliance
