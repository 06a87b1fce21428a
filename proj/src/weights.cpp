#include "torcoh/weights.hpp"

#include <sstream>

namespace torcoh {

std::string HighestWeight::str() const {
  std::ostringstream os;
  switch (kind) {
    case RootKind::A1: os << "A1:"; break;
    case RootKind::A2: os << "A2:"; break;
    case RootKind::D: os << "D:"; break;
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ',';
    os << coeffs[i].get_str();
  }
  return os.str();
}

RootSystemData root_system(RootKind kind, int ambient_rank) {
  RootSystemData rs;
  auto e = [](int i, int n) {
    std::vector<Rat> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  switch (kind) {
    case RootKind::A1:
      rs.positive_roots = {{Rat(1)}};
      rs.rho = {Rat(1, 2)};
      rs.gram = {{Rat(1)}};
      return rs;
    case RootKind::A2: {
      // e_i - e_j inside R^3, i < j
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          std::vector<Rat> r = e(i, 3);
          r[static_cast<std::size_t>(j)] = -1;
          rs.positive_roots.push_back(std::move(r));
        }
      rs.rho = {Rat(1), Rat(0), Rat(-1)};
      rs.gram.assign(3, std::vector<Rat>(3));
      for (int i = 0; i < 3; ++i) rs.gram[i][i] = 1;
      return rs;
    }
    case RootKind::D: {
      const int r = ambient_rank;
      if (r < 2) fail(Errc::validate, "D root system needs ambient rank >= 2");
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          std::vector<Rat> minus = e(i, r), plus = e(i, r);
          minus[static_cast<std::size_t>(j)] = -1;
          plus[static_cast<std::size_t>(j)] = 1;
          rs.positive_roots.push_back(std::move(minus));
          rs.positive_roots.push_back(std::move(plus));
        }
      rs.rho.assign(static_cast<std::size_t>(r), Rat(0));
      for (int i = 0; i < r; ++i) rs.rho[static_cast<std::size_t>(i)] = Rat(r - 1 - i);
      rs.gram.assign(static_cast<std::size_t>(r), std::vector<Rat>(static_cast<std::size_t>(r)));
      for (int i = 0; i < r; ++i) rs.gram[i][i] = 1;
      return rs;
    }
  }
  fail(Errc::internal, "unhandled root system kind");
}

void validate_dominant(const HighestWeight& w) {
  switch (w.kind) {
    case RootKind::A1:
      if (w.coeffs.size() != 1) fail(Errc::validate, "A1 weight needs one coefficient");
      if (w.coeffs[0] < 0) fail(Errc::validate, "A1 weight must be non-negative");
      return;
    case RootKind::A2:
      if (w.coeffs.size() != 2) fail(Errc::validate, "A2 weight needs two coefficients");
      if (w.coeffs[0] < 0 || w.coeffs[1] < 0)
        fail(Errc::validate, "A2 weight coefficients must be non-negative");
      return;
    case RootKind::D: {
      if (w.ambient_rank < 2) fail(Errc::validate, "D weight needs ambient rank >= 2");
      if (static_cast<int>(w.coeffs.size()) != w.ambient_rank)
        fail(Errc::validate, "D weight needs one coefficient per ambient coordinate");
      for (std::size_t i = 0; i + 2 < w.coeffs.size(); ++i)
        if (w.coeffs[i] < w.coeffs[i + 1])
          fail(Errc::validate, "D weight coordinates must be non-increasing");
      const Int& last = w.coeffs.back();
      const Int& prev = w.coeffs[w.coeffs.size() - 2];
      if (prev < abs(last))
        fail(Errc::validate, "D weight needs k_{r-1} >= |k_r|");
      return;
    }
  }
  fail(Errc::internal, "unhandled root system kind");
}

std::vector<Rat> weight_vector(const HighestWeight& w) {
  validate_dominant(w);
  switch (w.kind) {
    case RootKind::A1:
      return {Rat(w.coeffs[0]) / 2};
    case RootKind::A2: {
      // omega1 = (2,-1,-1)/3, omega2 = (1,1,-2)/3
      Rat t1(w.coeffs[0]), t2(w.coeffs[1]);
      return {(2 * t1 + t2) / 3, (t2 - t1) / 3, (-t1 - 2 * t2) / 3};
    }
    case RootKind::D: {
      std::vector<Rat> v;
      v.reserve(w.coeffs.size());
      for (const Int& c : w.coeffs) v.emplace_back(c);
      return v;
    }
  }
  fail(Errc::internal, "unhandled root system kind");
}

HighestWeight theta_twist(const HighestWeight& w) {
  validate_dominant(w);
  HighestWeight out = w;
  switch (w.kind) {
    case RootKind::A1:
      return out;
    case RootKind::A2:
      std::swap(out.coeffs[0], out.coeffs[1]);
      return out;
    case RootKind::D:
      out.coeffs.back() = -out.coeffs.back();
      return out;
  }
  fail(Errc::internal, "unhandled root system kind");
}

bool is_theta_fixed(const HighestWeight& w) {
  HighestWeight t = theta_twist(w);
  return t.coeffs == w.coeffs;
}

HighestWeight scale_weight(const HighestWeight& w, long m) {
  if (m < 0) fail(Errc::bad_argument, "weight scale must be non-negative");
  HighestWeight out = w;
  for (Int& c : out.coeffs) c *= m;
  return out;
}

Int weyl_dim(const RootSystemData& rs, const std::vector<Rat>& weight) {
  if (weight.size() != rs.rho.size())
    fail(Errc::bad_argument, "weight dimension disagrees with the root system ambient space");
  auto dot = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (rs.gram[i][j] != 0) s += a[i] * rs.gram[i][j] * b[j];
    return s;
  };
  std::vector<Rat> shifted(weight);
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += rs.rho[i];
  Rat num(1), den(1);
  for (const auto& alpha : rs.positive_roots) {
    Rat b = dot(rs.rho, alpha);
    if (b <= 0) fail(Errc::validate, "root system has a root not positive against rho");
    num *= dot(shifted, alpha);
    den *= b;
  }
  Rat dim = num / den;
  dim.canonicalize();
  if (dim.get_den() != 1 || dim.get_num() <= 0)
    fail(Errc::internal, "weight dimension product is not a positive integer (" + dim.get_str() + ")");
  return dim.get_num();
}

Int weyl_dim(const HighestWeight& w) {
  return weyl_dim(root_system(w.kind, w.ambient_rank), weight_vector(w));
}

HighestWeight twisted_diagonal_weight(int n, long m) {
  if (n < 1) fail(Errc::bad_argument, "need n >= 1");
  if (m < 0) fail(Errc::bad_argument, "need m >= 0");
  HighestWeight w;
  w.kind = RootKind::D;
  w.ambient_rank = n + 1;
  w.coeffs.assign(static_cast<std::size_t>(n) + 1, Int(n % 2 == 0 ? 2 * m : m));
  return w;
}

Int rho_m_rank(int n, int d, long m) {
  if (d < 1) fail(Errc::bad_argument, "need d >= 1");
  if (m < 1) fail(Errc::bad_argument, "need m >= 1");
  Int dim = weyl_dim(twisted_diagonal_weight(n, m));
  return Int(d) * pow_ui(2 * dim, static_cast<unsigned long>(d));
}

HighestWeight parse_weight(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    fail(Errc::parse, "weight spec needs the form KIND:coeffs, got '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  HighestWeight w;
  if (kind == "A1")
    w.kind = RootKind::A1;
  else if (kind == "A2")
    w.kind = RootKind::A2;
  else if (kind == "D")
    w.kind = RootKind::D;
  else
    fail(Errc::parse, "unknown root system '" + kind + "', want A1, A2 or D");
  std::string rest = spec.substr(colon + 1);
  if (!rest.empty() && rest.back() == ',')
    fail(Errc::parse, "trailing comma in weight spec '" + spec + "'");
  std::istringstream is(rest);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) fail(Errc::parse, "empty coefficient in weight spec '" + spec + "'");
    w.coeffs.push_back(parse_int(tok));
  }
  if (w.coeffs.empty()) fail(Errc::parse, "weight spec '" + spec + "' has no coefficients");
  if (w.kind == RootKind::D) w.ambient_rank = static_cast<int>(w.coeffs.size());
  validate_dominant(w);
  return w;
}

}  // namespace torcoh
