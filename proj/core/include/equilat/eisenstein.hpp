#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <string>

namespace equilat {

// Exact element a + b*w of Z[w], where w = e^{i*pi/3} satisfies w^2 = w - 1.
struct Eisenstein {
  std::int64_t a = 0;
  std::int64_t b = 0;

  constexpr Eisenstein() = default;
  constexpr Eisenstein(std::int64_t re, std::int64_t w_coeff) : a(re), b(w_coeff) {}

  static constexpr Eisenstein omega() { return {0, 1}; }

  friend constexpr Eisenstein operator+(Eisenstein x, Eisenstein y) { return {x.a + y.a, x.b + y.b}; }
  friend constexpr Eisenstein operator-(Eisenstein x, Eisenstein y) { return {x.a - y.a, x.b - y.b}; }
  friend constexpr Eisenstein operator-(Eisenstein x) { return {-x.a, -x.b}; }
  // (a + bw)(c + dw) = ac + (ad + bc)w + bd(w - 1)
  friend constexpr Eisenstein operator*(Eisenstein x, Eisenstein y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend constexpr Eisenstein operator*(std::int64_t n, Eisenstein x) { return {n * x.a, n * x.b}; }
  constexpr Eisenstein& operator+=(Eisenstein y) { return *this = *this + y; }
  constexpr Eisenstein& operator-=(Eisenstein y) { return *this = *this - y; }
  friend constexpr bool operator==(Eisenstein, Eisenstein) = default;

  // |x|^2 = a^2 + ab + b^2.
  constexpr std::int64_t norm() const { return a * a + a * b + b * b; }
  constexpr bool is_zero() const { return a == 0 && b == 0; }

  // Membership in mZ + mwZ.
  constexpr bool in_sublattice(std::int64_t m) const { return a % m == 0 && b % m == 0; }

  std::complex<double> to_complex() const {
    return {static_cast<double>(a) + 0.5 * static_cast<double>(b),
            static_cast<double>(b) * std::numbers::sqrt3 / 2.0};
  }

  // Report form "a+b w".
  std::string str() const {
    return std::to_string(a) + (b < 0 ? "-" : "+") + std::to_string(b < 0 ? -b : b) + " w";
  }
};

inline std::ostream& operator<<(std::ostream& os, Eisenstein x) { return os << x.str(); }

constexpr bool in_sublattice(Eisenstein x, std::int64_t m) { return x.in_sublattice(m); }

// Sixth root of unity zeta^k with zeta = e^{i*pi/3}.
class Root6 {
 public:
  constexpr Root6() = default;
  constexpr explicit Root6(int k) : k_(((k % 6) + 6) % 6) {}

  constexpr int exponent() const { return k_; }

  constexpr Eisenstein value() const {
    switch (k_) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 1};
      case 3: return {-1, 0};
      case 4: return {0, -1};
      default: return {1, -1};
    }
  }

  friend constexpr Root6 operator*(Root6 x, Root6 y) { return Root6(x.k_ + y.k_); }
  friend constexpr Root6 operator-(Root6 x) { return Root6(x.k_ + 3); }
  friend constexpr bool operator==(Root6, Root6) = default;

 private:
  int k_ = 0;
};

// Exact area expressed as a multiple of sqrt(3)/4, the area of one unit triangle.
struct TriangleArea {
  std::int64_t quarters_root3 = 0;

  double value() const { return static_cast<double>(quarters_root3) * std::numbers::sqrt3 / 4.0; }
  friend constexpr TriangleArea operator+(TriangleArea x, TriangleArea y) {
    return {x.quarters_root3 + y.quarters_root3};
  }
  friend constexpr bool operator==(TriangleArea, TriangleArea) = default;
};

// Area of a parallelogram with integer side lengths along directions 1 and w:
// l * w * sqrt(3)/2.
constexpr TriangleArea parallelogram_area(std::int64_t length, std::int64_t width) {
  return {2 * length * width};
}

}  // namespace equilat
