#include <numeric>
#include <regex>

#include "moufang/constructions.hpp"

namespace moufang {

namespace {

std::string power_name(const std::string& base, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

// "a^2" * "b" -> "a^2b", with the identity absorbed.
std::string concat_name(const std::string& left, const std::string& right) {
  if (left == "1") return right;
  if (right == "1") return left;
  return left + right;
}

// Names a single letter or a single power, which can take a trailing "u"
// without parentheses.
bool is_atomic_name(const std::string& name) {
  static const std::regex atomic("[a-z](\\^[0-9]+)?");
  return std::regex_match(name, atomic);
}

}  // namespace

Loop cyclic(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::ParamTooSmall, "cyclic group needs n >= 1");
  std::vector<Elem> data(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = power_name("g", i);
    for (std::size_t j = 0; j < n; ++j) data[i * n + j] = static_cast<Elem>((i + j) % n);
  }
  return Loop::from_trusted(n, std::move(data)).with_names(std::move(names));
}

Loop dihedral(std::size_t m) {
  if (m < 1) throw Error(ErrorCode::ParamTooSmall, "dihedral group needs m >= 1");
  const std::size_t n = 2 * m;
  std::vector<Elem> data(n * n);
  std::vector<std::string> names(n);
  auto index = [m](bool reflection, std::size_t i) { return static_cast<Elem>((reflection ? m : 0) + i % m); };
  for (std::size_t x = 0; x < n; ++x) {
    const bool xs = x >= m;
    const std::size_t i = x % m;
    names[x] = xs ? concat_name("s", power_name("r", i)) : power_name("r", i);
    for (std::size_t y = 0; y < n; ++y) {
      const bool ys = y >= m;
      const std::size_t j = y % m;
      // r^i s = s r^-i, so the exponent of r flips sign when a reflection
      // passes over it.
      const std::size_t k = ys ? (j + m - i) : (i + j);
      data[x * n + y] = index(xs != ys, k);
    }
  }
  return Loop::from_trusted(n, std::move(data)).with_names(std::move(names));
}

Loop direct_product(const Loop& a, const Loop& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  std::vector<Elem> data(n * n);
  std::vector<std::string> names(n);
  for (Elem x1 = 0; x1 < na; ++x1)
    for (Elem x2 = 0; x2 < nb; ++x2) {
      const std::size_t x = x1 * nb + x2;
      names[x] = (x == 0) ? "1" : "(" + a.element_name(x1) + "," + b.element_name(x2) + ")";
      for (Elem y1 = 0; y1 < na; ++y1)
        for (Elem y2 = 0; y2 < nb; ++y2)
          data[x * n + y1 * nb + y2] = static_cast<Elem>(a.mul(x1, y1) * nb + b.mul(x2, y2));
    }
  return Loop::from_trusted(n, std::move(data)).with_names(std::move(names));
}

Loop generalized_quaternion(std::size_t m) {
  if (m < 2) throw Error(ErrorCode::ParamTooSmall, "generalized quaternion group needs m >= 2");
  const std::size_t half = 2 * m;  // order of a
  const std::size_t n = 2 * half;
  std::vector<Elem> data(n * n);
  std::vector<std::string> names(n);
  auto a_pow = [half](std::size_t i) { return static_cast<Elem>(i % half); };
  auto a_pow_b = [half](std::size_t i) { return static_cast<Elem>(half + i % half); };
  for (std::size_t x = 0; x < n; ++x) {
    const bool xb = x >= half;
    const std::size_t i = x % half;
    names[x] = xb ? concat_name(power_name("a", i), "b") : power_name("a", i);
    for (std::size_t y = 0; y < n; ++y) {
      const bool yb = y >= half;
      const std::size_t j = y % half;
      Elem p;
      if (!xb && !yb) {
        p = a_pow(i + j);
      } else if (!xb && yb) {
        p = a_pow_b(i + j);
      } else if (xb && !yb) {
        p = a_pow_b(i + half - j);  // b a^j = a^-j b
      } else {
        p = a_pow(i + half - j + m);  // a^i b a^j b = a^(i-j) b^2 = a^(i-j+m)
      }
      data[x * n + y] = p;
    }
  }
  return Loop::from_trusted(n, std::move(data)).with_names(std::move(names));
}

Loop metacyclic(std::size_t m, std::size_t k, std::size_t r) {
  if (m < 1 || k < 1) throw Error(ErrorCode::ParamTooSmall, "metacyclic group needs m, k >= 1");
  // r must be a unit of Z_m with r^k = 1.
  std::size_t rk = 1 % m;
  for (std::size_t i = 0; i < k; ++i) rk = rk * (r % m) % m;
  if (rk != 1 % m || std::gcd(r, m) != 1) {
    throw Error(ErrorCode::InvalidArgument, "metacyclic twist " + std::to_string(r) + " is not a unit of order dividing " +
                                                std::to_string(k) + " mod " + std::to_string(m));
  }
  std::vector<std::size_t> twist(k);  // r^j mod m
  twist[0] = 1 % m;
  for (std::size_t j = 1; j < k; ++j) twist[j] = twist[j - 1] * r % m;
  const std::size_t n = m * k;
  std::vector<Elem> data(n * n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t i = x % m, j = x / m;
    names[x] = concat_name(power_name("a", i), power_name("b", j));
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i2 = y % m, j2 = y / m;
      // b^j a^i2 = a^(r^j i2) b^j
      data[x * n + y] = static_cast<Elem>((i + twist[j] * i2) % m + m * ((j + j2) % k));
    }
  }
  return Loop::from_trusted(n, std::move(data)).with_names(std::move(names));
}

Loop heisenberg(std::size_t p) {
  if (p < 2) throw Error(ErrorCode::ParamTooSmall, "Heisenberg group needs p >= 2");
  const std::size_t n = p * p * p;
  std::vector<Elem> data(n * n);
  std::vector<std::string> names(n);
  // (x, y, z) has index x + p y + p^2 z and multiplies as unitriangular matrices.
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t x = a % p, y = a / p % p, z = a / (p * p);
    const std::size_t w = (z + p * p - x * y % p) % p;  // (x, y, z) = a^x b^y c^w
    names[a] = concat_name(concat_name(power_name("a", x), power_name("b", y)), power_name("c", w));
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t x2 = b % p, y2 = b / p % p, z2 = b / (p * p);
      data[a * n + b] = static_cast<Elem>((x + x2) % p + p * ((y + y2) % p) + p * p * ((z + z2 + x * y2) % p));
    }
  }
  return Loop::from_trusted(n, std::move(data)).with_names(std::move(names));
}

Loop chein_double(const Loop& group, Elem c, CheinOptions options) {
  const std::size_t g = group.order();
  if (c >= g) throw Error(ErrorCode::InvalidArgument, "multiplier index " + std::to_string(c) + " out of range");
  if (!group.is_group()) throw Error(ErrorCode::BaseNotGroup, "Chein doubling needs an associative base");
  if (!center(group).contains(c)) {
    throw Error(ErrorCode::NotCentral, "multiplier " + group.element_name(c) + " is not central");
  }
  if (options.strict_paper && c == 0) {
    throw Error(ErrorCode::NotCentral, "strict mode requires a non-identity central multiplier");
  }
  const std::size_t n = 2 * g;
  std::vector<Elem> inverse(g);
  for (Elem h = 0; h < g; ++h) inverse[h] = group.inv(h);
  auto m = [&group](Elem x, Elem y) { return group.mul(x, y); };
  const auto u_of = [g](Elem x) { return static_cast<Elem>(g + x); };

  std::vector<Elem> data(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const bool xu = x >= g;
      const bool yu = y >= g;
      const Elem gx = xu ? x - static_cast<Elem>(g) : x;
      const Elem hy = yu ? y - static_cast<Elem>(g) : y;
      Elem p;
      if (!xu && !yu) {
        p = m(gx, hy);
      } else if (!xu && yu) {
        p = u_of(m(hy, gx));
      } else if (xu && !yu) {
        p = u_of(m(gx, inverse[hy]));
      } else {
        p = m(m(c, inverse[hy]), gx);
      }
      data[x * n + y] = p;
    }

  std::vector<std::string> names(n);
  for (Elem x = 0; x < g; ++x) {
    const std::string base = group.element_name(x);
    names[x] = base;
    if (base == "1") {
      names[g + x] = "u";
    } else if (is_atomic_name(base) || base.front() == '(') {
      names[g + x] = base + "u";
    } else {
      names[g + x] = "(" + base + ")u";
    }
  }
  return Loop::from_trusted(n, std::move(data)).with_names(std::move(names));
}

Loop generalized_octonion(std::size_t m) {
  if (m < 2) throw Error(ErrorCode::ParamTooSmall, "generalized octonion loop needs m >= 2");
  return chein_double(generalized_quaternion(m), static_cast<Elem>(m));
}

}  // namespace moufang
