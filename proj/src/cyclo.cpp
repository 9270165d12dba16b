#include "alexobs/cyclo.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace alexobs {

namespace {

constexpr long long kMaxOrder = 1'000'000'000'000LL;

std::mutex g_phi_mutex;
std::map<long long, LaurentPoly>& phi_cache() {
  static std::map<long long, LaurentPoly> cache;
  return cache;
}

bool phi_cached(long long e, LaurentPoly* out) {
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = phi_cache().find(e);
  if (it == phi_cache().end()) return false;
  *out = it->second;
  return true;
}

void phi_store(long long e, const LaurentPoly& p) {
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  phi_cache().emplace(e, p);
}

}  // namespace

std::vector<long long> divisors_of(long long m) {
  if (m < 1) throw std::domain_error("divisors_of requires m >= 1");
  std::vector<long long> divs;
  for (long long k = 1; k * k <= m; ++k) {
    if (m % k == 0) {
      divs.push_back(k);
      if (k != m / k) divs.push_back(m / k);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

LaurentPoly cyclotomic(long long e) {
  if (e < 1) throw std::domain_error("cyclotomic order must be >= 1");
  LaurentPoly out;
  if (phi_cached(e, &out)) return out;
  for (long long f : divisors_of(e)) {
    LaurentPoly ignored;
    if (phi_cached(f, &ignored)) continue;
    LaurentPoly p = LaurentPoly::t_power_minus_one(f);
    for (long long g : divisors_of(f)) {
      if (g == f) continue;
      LaurentPoly lower;
      phi_cached(g, &lower);  // present: divisors are visited in order
      p = exact_div(p, lower);
    }
    phi_store(f, p);
  }
  phi_cached(e, &out);
  return out;
}

CycloDivisor CycloDivisor::lambda(long long a) {
  if (a < 1) throw std::domain_error("Lambda_a requires a >= 1");
  CycloDivisor d;
  d.add(a, 1);
  return d;
}

long long CycloDivisor::multiplicity(long long m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? 0 : it->second;
}

void CycloDivisor::add(long long m, long long mult) {
  if (m < 1) throw std::domain_error("Lambda classes have positive order");
  const long long next = multiplicity(m) + mult;
  if (next == 0) {
    coeffs_.erase(m);
  } else {
    coeffs_[m] = next;
  }
}

CycloDivisor CycloDivisor::operator-() const {
  CycloDivisor out;
  for (const auto& [m, c] : coeffs_) out.coeffs_[m] = -c;
  return out;
}

CycloDivisor& CycloDivisor::operator+=(const CycloDivisor& rhs) {
  for (const auto& [m, c] : rhs.coeffs_) add(m, c);
  return *this;
}

CycloDivisor& CycloDivisor::operator-=(const CycloDivisor& rhs) {
  for (const auto& [m, c] : rhs.coeffs_) add(m, -c);
  return *this;
}

CycloDivisor& CycloDivisor::operator*=(const CycloDivisor& rhs) {
  *this = div_mul(*this, rhs);
  return *this;
}

CycloDivisor operator+(CycloDivisor lhs, const CycloDivisor& rhs) { return lhs += rhs; }
CycloDivisor operator-(CycloDivisor lhs, const CycloDivisor& rhs) { return lhs -= rhs; }
CycloDivisor operator*(CycloDivisor lhs, const CycloDivisor& rhs) { return lhs *= rhs; }

CycloDivisor div_mul(const CycloDivisor& a, const CycloDivisor& b) {
  CycloDivisor out;
  for (const auto& [ma, ca] : a.coeffs()) {
    for (const auto& [mb, cb] : b.coeffs()) {
      const long long g = std::gcd(ma, mb);
      const long long l = (ma / g) * mb;
      if (l > kMaxOrder) throw std::overflow_error("divisor order exceeds supported range");
      out.add(l, ca * cb * g);
    }
  }
  return out;
}

long long CycloDivisor::net_phi_multiplicity(long long e) const {
  long long net = 0;
  for (const auto& [m, c] : coeffs_) {
    if (m % e == 0) net += c;
  }
  return net;
}

std::map<long long, long long> CycloDivisor::phi_expansion() const {
  std::set<long long> orders;
  for (const auto& [m, c] : coeffs_) {
    for (long long e : divisors_of(m)) orders.insert(e);
  }
  std::map<long long, long long> out;
  for (long long e : orders) {
    const long long net = net_phi_multiplicity(e);
    if (net != 0) out[e] = net;
  }
  return out;
}

long long CycloDivisor::root_count() const {
  long long total = 0;
  for (const auto& [m, c] : coeffs_) total += c * m;
  return total;
}

std::string CycloDivisor::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : coeffs_) {
    long long a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1) os << a << "*";
    os << "L" << m;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloDivisor& d) {
  return os << d.str();
}

bool is_realizable(const CycloDivisor& d) {
  for (const auto& [e, net] : d.phi_expansion()) {
    (void)e;
    if (net < 0) return false;
  }
  return true;
}

LaurentPoly divisor_to_poly(const CycloDivisor& d) {
  const auto expansion = d.phi_expansion();
  for (const auto& [e, net] : expansion) {
    if (net < 0) {
      throw std::domain_error(
          "divisor is not realizable as a polynomial: net multiplicity of Phi_" +
          std::to_string(e) + " is " + std::to_string(net));
    }
  }
  LaurentPoly out = LaurentPoly::one();
  for (const auto& [e, net] : expansion) {
    out *= pow(cyclotomic(e), static_cast<unsigned long long>(net));
  }
  return out;
}

LaurentPoly CycloFactorization::reassembled() const {
  LaurentPoly out = remainder;
  for (const auto& [e, mult] : cyclotomic_part) {
    out *= pow(cyclotomic(e), static_cast<unsigned long long>(mult));
  }
  return out;
}

CycloFactorization cyclo_factor(const LaurentPoly& p,
                                const std::set<long long>& orders) {
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  CycloFactorization out;
  out.probed_orders = orders;
  out.remainder = p;
  for (long long e : orders) {
    const LaurentPoly phi = cyclotomic(e);
    while (out.remainder.degree_span() >= phi.degree_span() &&
           divides(phi, out.remainder)) {
      out.remainder = exact_div(out.remainder, phi);
      ++out.cyclotomic_part[e];
    }
  }
  return out;
}

}  // namespace alexobs
