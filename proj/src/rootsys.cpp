#include "spinrep/rootsys.hpp"

#include "spinrep/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace spinrep {

std::int64_t TermOrder::key(const Weight& w) const noexcept {
  std::int64_t k = 0;
  const int n = std::min<int>(w.dim(), static_cast<int>(h_.size()));
  for (int i = 0; i < n; ++i) k += h_[i] * w.twice(i);
  return k;
}

int TermOrder::compare(const Weight& a, const Weight& b) const noexcept {
  std::int64_t ka = key(a), kb = key(b);
  if (ka != kb) return ka < kb ? -1 : 1;
  for (int i = 0; i < a.dim(); ++i)
    if (a.twice(i) != b.twice(i)) return a.twice(i) < b.twice(i) ? -1 : 1;
  return 0;
}

bool TermOrder::positive(const Weight& w) const noexcept {
  return compare(w, Weight(w.dim())) > 0;
}

namespace {

struct Diagram {
  std::vector<Rational> norm;                 // squared length of each simple root
  std::vector<std::pair<int, int>> edges;     // bonds
  RatMatrix eps;                              // simple roots in epsilon coordinates (may be empty)
  Rational eps_scale{1};
};

RatVector unit_vec(int n, int i, int c = 1) {
  RatVector v(n, Rational(0));
  v[i] = c;
  return v;
}

Diagram diagram_for(char family, int n) {
  Diagram d;
  auto chain = [&](int len) {
    for (int i = 0; i + 1 < len; ++i) d.edges.push_back({i, i + 1});
  };
  switch (family) {
    case 'A': {
      d.norm.assign(n, Rational(2));
      chain(n);
      for (int i = 0; i < n; ++i) {
        RatVector v(n + 1, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        d.eps.push_back(v);
      }
      break;
    }
    case 'B': {
      d.norm.assign(n, Rational(2));
      d.norm[n - 1] = 1;
      chain(n);
      for (int i = 0; i + 1 < n; ++i) {
        RatVector v(n, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        d.eps.push_back(v);
      }
      d.eps.push_back(unit_vec(n, n - 1));
      break;
    }
    case 'C': {
      d.norm.assign(n, Rational(1));
      d.norm[n - 1] = 2;
      chain(n);
      for (int i = 0; i + 1 < n; ++i) {
        RatVector v(n, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        d.eps.push_back(v);
      }
      d.eps.push_back(unit_vec(n, n - 1, 2));
      d.eps_scale = Rational(1, 2);
      break;
    }
    case 'D': {
      d.norm.assign(n, Rational(2));
      chain(n - 1);
      d.edges.push_back({n - 3, n - 1});
      for (int i = 0; i + 1 < n; ++i) {
        RatVector v(n, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        d.eps.push_back(v);
      }
      RatVector last(n, Rational(0));
      last[n - 2] = 1;
      last[n - 1] = 1;
      d.eps.push_back(last);
      break;
    }
    case 'E': {
      d.norm.assign(n, Rational(2));
      d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) d.edges.push_back({i, i + 1});
      break;
    }
    case 'F': {
      d.norm = {Rational(1), Rational(1), Rational(2), Rational(2)};
      chain(4);
      d.eps = {{Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)},
               {0, 0, 0, 1},
               {0, 0, 1, -1},
               {0, 1, -1, 0}};
      break;
    }
    case 'G': {
      d.norm = {Rational(2, 3), Rational(2)};
      chain(2);
      d.eps = {{1, -1, 0}, {-2, 1, 1}};
      d.eps_scale = Rational(1, 3);
      break;
    }
    default:
      throw InvalidArgument(std::string("unknown root system family '") + family + "'");
  }
  return d;
}

void validate_factor(const SimpleFactor& f) {
  auto bad = [&] {
    throw InvalidArgument(std::string("invalid root system ") + f.family + std::to_string(f.rank));
  };
  switch (f.family) {
    case 'A': if (f.rank < 1) bad(); break;
    case 'B': if (f.rank < 2) bad(); break;
    case 'C': if (f.rank < 2) bad(); break;
    case 'D': if (f.rank < 3) bad(); break;
    case 'E': if (f.rank < 6 || f.rank > 8) bad(); break;
    case 'F': if (f.rank != 4) bad(); break;
    case 'G': if (f.rank != 2) bad(); break;
    case 'T': if (f.rank < 1) bad(); break;
    default: bad();
  }
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

RootSystemPtr RootSystem::simple(char family, int rank) {
  return product({SimpleFactor{static_cast<char>(std::toupper(family)), rank}});
}

RootSystemPtr RootSystem::product(std::vector<SimpleFactor> factors) {
  if (factors.empty()) throw InvalidArgument("empty root system descriptor");
  std::shared_ptr<RootSystem> rs(new RootSystem());
  for (auto& f : factors) {
    f.family = static_cast<char>(std::toupper(f.family));
    validate_factor(f);
  }
  // Torus factors go last so that the semisimple coordinates come first.
  std::stable_partition(factors.begin(), factors.end(),
                        [](const SimpleFactor& f) { return f.family != 'T'; });
  rs->factors_ = std::move(factors);
  rs->build();
  return rs;
}

RootSystemPtr RootSystem::parse(std::string_view descriptor) {
  std::vector<SimpleFactor> factors;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token.size() < 2 || !std::isalpha(static_cast<unsigned char>(token[0])))
      throw InvalidArgument("bad root system descriptor '" + std::string(descriptor) + "'");
    for (std::size_t i = 1; i < token.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(token[i])))
        throw InvalidArgument("bad root system descriptor '" + std::string(descriptor) + "'");
    factors.push_back({static_cast<char>(std::toupper(token[0])), std::stoi(token.substr(1))});
    token.clear();
  };
  for (std::size_t i = 0; i < descriptor.size(); ++i) {
    char ch = descriptor[i];
    if (ch == 'x' || ch == '+' || ch == '*' || ch == ' ' || ch == ',') {
      flush();
    } else if (std::isalpha(static_cast<unsigned char>(ch)) && !token.empty()) {
      flush();
      token += ch;
    } else {
      token += ch;
    }
  }
  flush();
  return product(std::move(factors));
}

void RootSystem::build() {
  // Assemble simple-root data factor by factor.
  std::vector<Diagram> diagrams;
  bool all_eps = true;
  for (const auto& f : factors_) {
    if (f.family == 'T') {
      torus_dim_ += f.rank;
      continue;
    }
    diagrams.push_back(diagram_for(f.family, f.rank));
    if (diagrams.back().eps.empty()) all_eps = false;
    factor_offset_.push_back(rank_);
    for (int i = 0; i < f.rank; ++i) simple_factor_.push_back(static_cast<int>(diagrams.size()) - 1);
    rank_ += f.rank;
  }
  dim_ = rank_ + torus_dim_;
  if (dim_ > kMaxDim)
    throw InvalidArgument("root system " + label() + " needs " + std::to_string(dim_) +
                          " coordinates, at most " + std::to_string(kMaxDim) + " supported");

  root_gram_.assign(rank_, RatVector(rank_, Rational(0)));
  for (std::size_t f = 0; f < diagrams.size(); ++f) {
    const auto& d = diagrams[f];
    const int off = factor_offset_[f];
    for (std::size_t i = 0; i < d.norm.size(); ++i) root_gram_[off + i][off + i] = d.norm[i];
    for (auto [i, j] : d.edges) {
      Rational v = -std::max(d.norm[i], d.norm[j]) / 2;
      root_gram_[off + i][off + j] = v;
      root_gram_[off + j][off + i] = v;
    }
    factor_long_norm_.push_back(*std::max_element(d.norm.begin(), d.norm.end()));
  }
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  RatMatrix cartan_rat(rank_, RatVector(rank_, Rational(0)));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      Rational c = 2 * root_gram_[i][j] / root_gram_[j][j];
      if (c.denominator() != 1) throw Error("non-integral Cartan entry");
      cartan_[i][j] = static_cast<int>(c.numerator());
      cartan_rat[i][j] = c;
    }
  cartan_inv_ = rank_ ? inverse(cartan_rat) : RatMatrix{};

  // Form on fundamental weights: G = E B^-1 E with E = diag(|alpha_i|^2 / 2).
  gram_.assign(dim_, RatVector(dim_, Rational(0)));
  if (rank_) {
    RatMatrix binv = inverse(root_gram_);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        gram_[i][j] = root_gram_[i][i] / 2 * binv[i][j] * root_gram_[j][j] / 2;
  }
  for (int t = rank_; t < dim_; ++t) gram_[t][t] = 1;

  for (int i = 0; i < rank_; ++i) {
    Weight a(dim_);
    for (int j = 0; j < rank_; ++j) a.set_twice(j, 2 * cartan_[i][j]);
    simple_.push_back(a);
  }

  // Positive roots by string closure in simple-root coordinates.
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    all.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < rank_; ++i) {
        int pairing = 0;
        for (int j = 0; j < rank_; ++j) pairing += beta[j] * cartan_[j][i];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!all.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!all.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  positive_coeffs_.assign(all.begin(), all.end());
  std::sort(positive_coeffs_.begin(), positive_coeffs_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int ha = std::accumulate(a.begin(), a.end(), 0);
              int hb = std::accumulate(b.begin(), b.end(), 0);
              if (ha != hb) return ha < hb;
              return a > b;
            });
  for (std::size_t r = 0; r < positive_coeffs_.size(); ++r) {
    Weight w(dim_);
    for (int i = 0; i < rank_; ++i)
      if (positive_coeffs_[r][i]) w += simple_[i] * positive_coeffs_[r][i];
    positive_.push_back(w);
    root_index_[w] = static_cast<int>(r) + 1;
    root_index_[-w] = -(static_cast<int>(r) + 1);
  }

  // Height functional scaled to integers on doubled coordinates.
  RatVector h(dim_, Rational(0));
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k) h[j] += cartan_inv_[j][k];
  std::int64_t l = lcm_of_denominators(h);
  std::vector<std::int64_t> hi(dim_);
  for (int j = 0; j < dim_; ++j) hi[j] = (h[j] * l).numerator();
  order_ = TermOrder(std::move(hi));

  // Epsilon realisation.
  if (all_eps) {
    std::size_t fi = 0;
    for (const auto& f : factors_) {
      if (f.family == 'T') continue;
      eps_offset_.push_back(eps_dim_);
      eps_dim_ += static_cast<int>(diagrams[fi].eps[0].size());
      eps_scale_.push_back(diagrams[fi].eps_scale);
      ++fi;
    }
    const int torus_eps = eps_dim_;
    eps_dim_ += torus_dim_;
    eps_.assign(dim_, RatVector(eps_dim_, Rational(0)));
    for (std::size_t f = 0; f < diagrams.size(); ++f) {
      const auto& d = diagrams[f];
      const int off = factor_offset_[f];
      const int n = static_cast<int>(d.norm.size());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Rational g = d.eps_scale * dot(d.eps[i], d.eps[j]);
          if (g != root_gram_[off + i][off + j])
            throw Error("epsilon realisation inconsistent for " + label());
        }
      // fundamental weight i = sum_k (C^-1)_{ik} alpha_k
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          Rational c = cartan_inv_[off + i][off + k];
          if (c == 0) continue;
          for (std::size_t e = 0; e < d.eps[k].size(); ++e)
            eps_[off + i][eps_offset_[f] + e] += c * d.eps[k][e];
        }
    }
    for (int t = 0; t < torus_dim_; ++t) eps_[rank_ + t][torus_eps + t] = 1;
  }
}

std::string RootSystem::label() const {
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += "x";
    s += f.family;
    s += std::to_string(f.rank);
  }
  return s;
}

bool RootSystem::is_simple() const noexcept {
  return factors_.size() == 1 && factors_[0].family != 'T';
}

Weight RootSystem::rho() const {
  Weight w(dim_);
  for (int i = 0; i < rank_; ++i) w.set_twice(i, 2);
  return w;
}

Weight RootSystem::weight(std::span<const int> coords) const {
  if (static_cast<int>(coords.size()) != dim_)
    throw InvalidArgument("weight for " + label() + " needs " + std::to_string(dim_) + " coordinates");
  return Weight::integral(coords);
}

Weight RootSystem::weight(std::initializer_list<int> coords) const {
  return weight(std::span<const int>(coords.begin(), coords.size()));
}

Rational RootSystem::form(const Weight& a, const Weight& b) const {
  // Doubled coordinates: (a, b) = sum a_i G_ij b_j / 4.
  Rational s(0);
  for (int i = 0; i < dim_; ++i) {
    if (!a.twice(i)) continue;
    for (int j = 0; j < dim_; ++j)
      if (b.twice(j) && gram_[i][j] != 0)
        s += gram_[i][j] * static_cast<std::int64_t>(a.twice(i)) * b.twice(j);
  }
  return s / 4;
}

Rational RootSystem::coroot_pairing(const Weight& lambda, const Weight& beta) const {
  Rational n = form(beta, beta);
  if (n == 0) throw InvalidArgument("coroot of the zero vector");
  return 2 * form(lambda, beta) / n;
}

RatVector RootSystem::root_coordinates(const Weight& w) const {
  RatVector c(rank_, Rational(0));
  for (int j = 0; j < rank_; ++j) {
    if (!w.twice(j)) continue;
    Rational m(w.twice(j), 2);
    for (int i = 0; i < rank_; ++i) c[i] += m * cartan_inv_[j][i];
  }
  return c;
}

Rational RootSystem::height(const Weight& w) const {
  Rational h(0);
  for (const auto& c : root_coordinates(w)) h += c;
  return h;
}

bool RootSystem::is_root(const Weight& w) const { return root_index_.count(w) > 0; }

std::optional<int> RootSystem::positive_root_index(const Weight& w) const {
  auto it = root_index_.find(w);
  if (it == root_index_.end() || it->second < 0) return std::nullopt;
  return it->second - 1;
}

bool RootSystem::is_long(const Weight& root) const {
  auto it = root_index_.find(root);
  if (it == root_index_.end()) throw InvalidArgument(root.str() + " is not a root of " + label());
  const auto& c = positive_coeffs_[std::abs(it->second) - 1];
  int f = -1;
  for (int i = 0; i < rank_; ++i)
    if (c[i]) { f = simple_factor_[i]; break; }
  return norm2(root) == factor_long_norm_[f];
}

SpecialElements RootSystem::special_elements() const {
  if (!is_simple()) throw InvalidArgument("special elements need a simple root system, got " + label());
  SpecialElements s;
  s.theta = positive_.back();
  s.rho = rho();
  s.rho_s = Weight(dim_);
  s.rho_l = Weight(dim_);
  bool found_short = false;
  for (const auto& r : positive_) {
    if (is_long(r)) {
      s.rho_l += r.half();
    } else {
      s.rho_s += r.half();
      s.theta_s = r;  // roots are in increasing height, so the last short root wins
      found_short = true;
    }
  }
  if (!found_short) {
    s.theta_s = s.theta;
    s.rho_s = s.rho_l;
  }
  for (int i = 0; i < rank_; ++i)
    if (!is_long(simple_[i]) || !found_short) s.short_simple.push_back(i);
  Weight sum_fund(dim_);
  for (int i : s.short_simple) sum_fund += fundamental_weight(i);
  if (sum_fund != s.rho_s)
    throw Error("rho_s differs from the sum of short fundamental weights for " + label());
  Rational h = coroot_pairing(s.rho, s.theta_s) + 1;
  s.coxeter_number = static_cast<int>(h.numerator());
  return s;
}

std::vector<int> RootSystem::exponents() const {
  std::map<int, int> count;
  int max_h = 0;
  for (const auto& c : positive_coeffs_) {
    int h = std::accumulate(c.begin(), c.end(), 0);
    ++count[h];
    max_h = std::max(max_h, h);
  }
  std::vector<int> e(torus_dim_, 0);
  for (int k = 1; k <= max_h; ++k) {
    int here = count[k] - (count.count(k + 1) ? count[k + 1] : 0);
    for (int i = 0; i < here; ++i) e.push_back(k);
  }
  return e;
}

RatVector RootSystem::to_epsilon(const Weight& w) const {
  if (!has_epsilon()) throw InvalidArgument(label() + " has no epsilon realisation");
  RatVector v(eps_dim_, Rational(0));
  for (int i = 0; i < dim_; ++i) {
    if (!w.twice(i)) continue;
    Rational c = w.coord(i);
    for (int e = 0; e < eps_dim_; ++e)
      if (eps_[i][e] != 0) v[e] += c * eps_[i][e];
  }
  return v;
}

Weight RootSystem::from_epsilon(std::span<const Rational> v) const {
  if (!has_epsilon()) throw InvalidArgument(label() + " has no epsilon realisation");
  if (static_cast<int>(v.size()) != eps_dim_)
    throw InvalidArgument("epsilon vector for " + label() + " needs " + std::to_string(eps_dim_) +
                          " entries");
  Weight w(dim_);
  RatVector vv(v.begin(), v.end());
  for (int i = 0; i < rank_; ++i) {
    const int f = simple_factor_[i];
    RatVector a = to_epsilon(simple_[i]);
    Rational m = 2 * eps_scale_[f] * dot(vv, a) / root_gram_[i][i];
    Rational t = 2 * m;
    if (t.denominator() != 1)
      throw InvalidArgument("epsilon vector does not give a weight in (1/2)P");
    w.set_twice(i, static_cast<int>(t.numerator()));
  }
  const int torus_eps = eps_dim_ - torus_dim_;
  for (int t = 0; t < torus_dim_; ++t) {
    Rational tw = 2 * v[torus_eps + t];
    if (tw.denominator() != 1) throw InvalidArgument("torus coordinate not a multiple of 1/2");
    w.set_twice(rank_ + t, static_cast<int>(tw.numerator()));
  }
  return w;
}

Weight RootSystem::from_epsilon(std::initializer_list<Rational> v) const {
  return from_epsilon(std::span<const Rational>(v.begin(), v.size()));
}

int RootSystem::bourbaki_index(int i) const {
  if (i < 0 || i >= rank_) return i;
  const int f = simple_factor_[i];
  std::size_t k = 0;
  for (const auto& fac : factors_) {
    if (fac.family == 'T') continue;
    if (static_cast<int>(k) == f) {
      if (fac.family == 'F') return factor_offset_[f] + (3 - (i - factor_offset_[f]));
      return i;
    }
    ++k;
  }
  return i;
}

int RootSystem::internal_index_from_bourbaki(int b) const { return bourbaki_index(b); }

}  // namespace spinrep
