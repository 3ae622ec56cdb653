#include "moufang/octonion.hpp"

#include <cmath>
#include <numbers>
#include <optional>

namespace moufang {

namespace {

using Quat = std::array<double, 4>;

Quat qmul(const Quat& p, const Quat& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Quat qconj(const Quat& q) { return {q[0], -q[1], -q[2], -q[3]}; }

Quat qsub(const Quat& a, const Quat& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }
Quat qadd(const Quat& a, const Quat& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }

}  // namespace

double Octon::norm() const {
  double s = 0;
  for (double v : c) s += v * v;
  return std::sqrt(s);
}

Octon Octon::conj() const {
  Octon o = *this;
  for (std::size_t i = 1; i < 8; ++i) o.c[i] = -o.c[i];
  return o;
}

Octon operator+(const Octon& a, const Octon& b) {
  Octon o;
  for (std::size_t i = 0; i < 8; ++i) o.c[i] = a.c[i] + b.c[i];
  return o;
}

Octon operator-(const Octon& a, const Octon& b) {
  Octon o;
  for (std::size_t i = 0; i < 8; ++i) o.c[i] = a.c[i] - b.c[i];
  return o;
}

Octon oct_mul(const Octon& x, const Octon& y) {
  const Quat a{x.c[0], x.c[1], x.c[2], x.c[3]};
  const Quat b{x.c[4], x.c[5], x.c[6], x.c[7]};
  const Quat c{y.c[0], y.c[1], y.c[2], y.c[3]};
  const Quat d{y.c[4], y.c[5], y.c[6], y.c[7]};
  const Quat lo = qsub(qmul(a, c), qmul(qconj(d), b));
  const Quat hi = qadd(qmul(d, a), qmul(b, qconj(c)));
  return Octon{{lo[0], lo[1], lo[2], lo[3], hi[0], hi[1], hi[2], hi[3]}};
}

double max_norm_distance(const Octon& a, const Octon& b) {
  double m = 0;
  for (std::size_t i = 0; i < 8; ++i) m = std::max(m, std::abs(a.c[i] - b.c[i]));
  return m;
}

Octon oct_exp_e2(double theta) {
  Octon o;
  o.c[0] = std::cos(theta);
  o.c[2] = std::sin(theta);
  return o;
}

namespace {

class Closure {
 public:
  Closure(double eps, std::size_t limit) : eps_(eps), limit_(limit) {}

  // Index of the stored element within eps of x, if any.
  std::optional<Elem> match(const Octon& x) const {
    std::optional<Elem> found;
    for (Elem i = 0; i < elements_.size(); ++i) {
      if (max_norm_distance(elements_[i], x) >= eps_) continue;
      if (found) {
        throw Error(ErrorCode::MatchAmbiguous, "a product lies within eps of elements " + std::to_string(*found) +
                                                   " and " + std::to_string(i));
      }
      found = i;
    }
    return found;
  }

  Elem insert(const Octon& x) {
    if (auto i = match(x)) return *i;
    if (elements_.size() >= limit_) {
      throw Error(ErrorCode::ClosureOverflow, "closure exceeded " + std::to_string(limit_) + " elements");
    }
    elements_.push_back(x);
    return static_cast<Elem>(elements_.size() - 1);
  }

  std::vector<Octon>& elements() { return elements_; }

 private:
  double eps_;
  std::size_t limit_;
  std::vector<Octon> elements_;
};

}  // namespace

NumericLoopWitness generate_octonion_subloop(std::size_t n, double eps) {
  if (n < 2) throw Error(ErrorCode::ParamTooSmall, "octonion subloop needs n >= 2");
  if (n > kMaxOctonionN) {
    throw Error(ErrorCode::OrderTooLarge, "octonion subloop is limited to n <= " + std::to_string(kMaxOctonionN));
  }
  if (!(eps > 0) || !std::isfinite(eps)) throw Error(ErrorCode::InvalidArgument, "eps must be positive and finite");

  Closure closure(eps, 16 * n);
  closure.insert(Octon::basis(0));
  closure.insert(oct_exp_e2(std::numbers::pi / static_cast<double>(n)));
  closure.insert(Octon::basis(3));
  closure.insert(Octon::basis(5));

  // Worklist: every element before `done` has been multiplied by every element
  // before `done`, in both orders.
  auto& elems = closure.elements();
  for (std::size_t done = 0; done < elems.size(); ++done) {
    for (std::size_t i = 0; i <= done; ++i) {
      const Octon z = elems[done];
      const Octon w = elems[i];
      closure.insert(oct_mul(z, w));
      closure.insert(oct_mul(w, z));
    }
  }

  const std::size_t size = elems.size();
  if (size < 8 * n) {
    throw Error(ErrorCode::MatchAmbiguous, "closure collapsed to " + std::to_string(size) + " elements, expected " +
                                               std::to_string(8 * n) + "; eps merges distinct octonions");
  }
  if (size > 8 * n) {
    throw Error(ErrorCode::ClosureOverflow,
                "closure has " + std::to_string(size) + " elements, expected " + std::to_string(8 * n));
  }
  std::vector<std::vector<long long>> raw(size, std::vector<long long>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      const auto k = closure.match(oct_mul(elems[i], elems[j]));
      if (!k) throw std::logic_error("closed octonion set is not closed");
      raw[i][j] = *k;
    }
  // Element 0 is e0, so validation leaves the labels untouched.
  Loop table = validate_table(raw);
  return NumericLoopWitness{std::move(elems), std::move(table)};
}

}  // namespace moufang
