#include "mercator/series/axioms.hpp"

#include <algorithm>
#include <stdexcept>

#include "mercator/series/gudermann_series.hpp"

namespace mercator::series {

std::string Monomial::to_string() const {
  static constexpr char kNames[] = {'X', 'Y', 'Z'};
  std::string out;
  for (int v = 0; v < 3; ++v) {
    const int e = exponents[v];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += kNames[v];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool AxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck& AxiomReport::check(const std::string& axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return c;
  throw std::out_of_range("AxiomReport: no check named " + axiom);
}

namespace {

/// Dense trivariate series truncated at total degree N, only what the
/// associativity check needs.
class Trivariate {
 public:
  explicit Trivariate(int order) : order_(order) {
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order; ++j)
        for (int k = 0; i + j + k <= order; ++k) monomials_.push_back({{i, j, k}});
    // Graded order: by total degree, then lexicographically by exponents of X, Y.
    std::stable_sort(monomials_.begin(), monomials_.end(), [](const Monomial& a, const Monomial& b) {
      const int da = a.exponents[0] + a.exponents[1] + a.exponents[2];
      const int db = b.exponents[0] + b.exponents[1] + b.exponents[2];
      if (da != db) return da < db;
      return a.exponents > b.exponents;
    });
    index_.assign(static_cast<std::size_t>((order + 1) * (order + 1) * (order + 1)), -1);
    for (std::size_t n = 0; n < monomials_.size(); ++n) index_[slot(monomials_[n])] = static_cast<int>(n);
    coefficients_.assign(monomials_.size(), BigRational(0));
  }

  int order() const { return order_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  BigRational& operator[](const Monomial& m) { return coefficients_[index_[slot(m)]]; }
  const BigRational& operator[](const Monomial& m) const { return coefficients_[index_[slot(m)]]; }

  static Trivariate from_bivariate(const BivariateSeries& f, int var_a, int var_b) {
    Trivariate t(f.order());
    for (int i = 0; i <= f.order(); ++i)
      for (int j = 0; i + j <= f.order(); ++j) {
        Monomial m;
        m.exponents[var_a] += i;
        m.exponents[var_b] += j;
        t[m] = f.at(i, j);
      }
    return t;
  }

  friend Trivariate operator*(const Trivariate& a, const Trivariate& b) {
    Trivariate r(a.order_);
    for (const auto& ma : a.monomials_) {
      const BigRational& x = a[ma];
      if (x.is_zero()) continue;
      const int da = ma.exponents[0] + ma.exponents[1] + ma.exponents[2];
      for (const auto& mb : b.monomials_) {
        const int db = mb.exponents[0] + mb.exponents[1] + mb.exponents[2];
        if (da + db > a.order_) break;  // monomials are graded
        const BigRational& y = b[mb];
        if (y.is_zero()) continue;
        Monomial m{{ma.exponents[0] + mb.exponents[0], ma.exponents[1] + mb.exponents[1],
                     ma.exponents[2] + mb.exponents[2]}};
        r[m] += x * y;
      }
    }
    return r;
  }

  Trivariate& operator+=(const Trivariate& rhs) {
    for (std::size_t n = 0; n < coefficients_.size(); ++n) coefficients_[n] += rhs.coefficients_[n];
    return *this;
  }

 private:
  std::size_t slot(const Monomial& m) const {
    const auto base = static_cast<std::size_t>(order_ + 1);
    return (static_cast<std::size_t>(m.exponents[0]) * base + m.exponents[1]) * base + m.exponents[2];
  }

  int order_;
  std::vector<Monomial> monomials_;
  std::vector<int> index_;
  std::vector<BigRational> coefficients_;
};

/// law(u, w) for trivariate u, w with zero constant terms.
Trivariate substitute(const BivariateSeries& law, const Trivariate& u, const Trivariate& w) {
  const int order = law.order();
  std::vector<Trivariate> u_pow{Trivariate(order)}, w_pow{Trivariate(order)};
  u_pow[0][Monomial{}] = 1;
  w_pow[0][Monomial{}] = 1;
  for (int k = 1; k <= order; ++k) {
    u_pow.push_back(u_pow.back() * u);
    w_pow.push_back(w_pow.back() * w);
  }
  Trivariate r(order);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) {
      const BigRational& c = law.at(i, j);
      if (c.is_zero()) continue;
      Trivariate term = u_pow[i] * w_pow[j];
      for (const auto& m : term.monomials()) {
        if (!term[m].is_zero()) r[m] += c * term[m];
      }
    }
  return r;
}

std::optional<Monomial> first_difference(const Trivariate& a, const Trivariate& b) {
  for (const auto& m : a.monomials())
    if (a[m] != b[m]) return m;
  return std::nullopt;
}

AxiomCheck make_check(std::string name, std::optional<Monomial> offending) {
  AxiomCheck c;
  c.axiom = std::move(name);
  c.passed = !offending.has_value();
  c.first_offending = offending;
  return c;
}

}  // namespace

AxiomReport check_group_law_axioms(const BivariateSeries& law) {
  const int order = law.order();
  AxiomReport report;

  // Unit: compare F(X,0) against X and F(0,Y) against Y.
  std::optional<Monomial> unit_bad;
  for (int d = 0; d <= order && !unit_bad; ++d) {
    const BigRational expected = (d == 1) ? BigRational(1) : BigRational(0);
    if (law.at(d, 0) != expected) unit_bad = Monomial{{d, 0, 0}};
    else if (law.at(0, d) != expected) unit_bad = Monomial{{0, d, 0}};
  }
  report.checks.push_back(make_check("unit", unit_bad));

  const Trivariate xy = Trivariate::from_bivariate(law, 0, 1);
  const Trivariate yx = Trivariate::from_bivariate(law.swapped(), 0, 1);
  report.checks.push_back(make_check("commutativity", first_difference(xy, yx)));

  Trivariate x(order), y(order), z(order);
  if (order >= 1) {
    x[Monomial{{1, 0, 0}}] = 1;
    y[Monomial{{0, 1, 0}}] = 1;
    z[Monomial{{0, 0, 1}}] = 1;
  }
  const Trivariate yz = Trivariate::from_bivariate(law, 1, 2);
  std::optional<Monomial> assoc_bad;
  if (!law.at(0, 0).is_zero()) {
    assoc_bad = Monomial{};  // substitution is undefined with a constant term
  } else {
    assoc_bad = first_difference(substitute(law, xy, z), substitute(law, x, yz));
  }
  report.checks.push_back(make_check("associativity", assoc_bad));
  return report;
}

UnivariateSeries evaluate_at_negation(const BivariateSeries& law) {
  UnivariateSeries r(law.order());
  for (int i = 0; i <= law.order(); ++i)
    for (int j = 0; i + j <= law.order(); ++j) {
      const BigRational& c = law.at(i, j);
      r[i + j] += (j % 2 == 0) ? c : -c;
    }
  return r;
}

InvolutionCheck check_involution(const UnivariateSeries& log_series,
                                 const UnivariateSeries& exp_series) {
  const int order = std::min(log_series.order(), exp_series.order());
  InvolutionCheck result;
  for (int d = 0; d <= order; ++d) {
    bool ok;
    if (d % 2 == 0) {
      ok = log_series[d].is_zero() && exp_series[d].is_zero();
    } else {
      const int n = (d - 1) / 2;
      ok = exp_series[d] == (n % 2 == 0 ? log_series[d] : -log_series[d]);
    }
    if (!ok) {
      result.passed = false;
      result.first_offending_degree = d;
      break;
    }
  }
  return result;
}

InvolutionCheck check_involution_coefficients(int order) {
  if (order < 1) throw std::invalid_argument("check_involution_coefficients: order must be at least 1");
  using namespace elementary;
  const UnivariateSeries log = series_compose(arctanh_series(order), sin_series(order));
  const UnivariateSeries exp = series_compose(arcsin_series(order), tanh_series(order));
  return check_involution(log, exp);
}

}  // namespace mercator::series
