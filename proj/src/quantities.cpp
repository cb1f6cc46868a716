#include "decohere/quantities.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace decohere {

Dimension Dimension::pow(int num, int den) const {
  if (den <= 0) throw DimensionError(fmt::format("power {}/{} has a non-positive denominator", num, den));
  std::array<int, kBaseCount> out{};
  for (int i = 0; i < kBaseCount; ++i) {
    const int scaled = halves_[i] * num;
    if (scaled % den != 0) {
      throw DimensionError(fmt::format("{} raised to {}/{} leaves an exponent finer than 1/2",
                                       to_string(), num, den));
    }
    out[i] = scaled / den;
  }
  return from_halves(out);
}

std::string Dimension::to_string() const {
  static constexpr const char* kSymbols[kBaseCount] = {"kg", "m", "s", "K", "C"};
  std::string out;
  for (int i = 0; i < kBaseCount; ++i) {
    const int h = halves_[i];
    if (h == 0) continue;
    if (!out.empty()) out += ' ';
    out += kSymbols[i];
    if (h == 2) continue;
    if (h % 2 == 0) {
      out += fmt::format("^{}", h / 2);
    } else {
      out += fmt::format("^{}/2", h);
    }
  }
  return out.empty() ? "1" : out;
}

namespace {

void require_same(const Quantity& a, const Quantity& b, const char* op) {
  if (!(a.dim() == b.dim())) {
    throw DimensionError(fmt::format("cannot {} [{}] and [{}]", op, a.dim().to_string(), b.dim().to_string()));
  }
}

}  // namespace

Quantity::Quantity(double value, Dimension dim) : value_(value), dim_(dim) {
  if (!std::isfinite(value)) {
    throw NonFiniteError(fmt::format("non-finite value {} [{}]", value, dim.to_string()));
  }
}

double Quantity::in(const Dimension& expected) const {
  if (!(dim_ == expected)) {
    throw DimensionError(fmt::format("expected [{}], got [{}]", expected.to_string(), dim_.to_string()));
  }
  return value_;
}

Quantity operator+(const Quantity& a, const Quantity& b) {
  require_same(a, b, "add");
  return Quantity(a.value_ + b.value_, a.dim_);
}

Quantity operator-(const Quantity& a, const Quantity& b) {
  require_same(a, b, "subtract");
  return Quantity(a.value_ - b.value_, a.dim_);
}

Quantity operator*(const Quantity& a, const Quantity& b) { return Quantity(a.value_ * b.value_, a.dim_ * b.dim_); }

Quantity operator/(const Quantity& a, const Quantity& b) {
  if (b.value_ == 0.0) throw NonFiniteError(fmt::format("division by zero [{}]", b.dim_.to_string()));
  return Quantity(a.value_ / b.value_, a.dim_ / b.dim_);
}

Quantity operator*(double a, const Quantity& b) { return Quantity(a * b.value_, b.dim_); }
Quantity operator*(const Quantity& a, double b) { return Quantity(a.value_ * b, a.dim_); }

Quantity operator/(const Quantity& a, double b) {
  if (b == 0.0) throw NonFiniteError("division by zero");
  return Quantity(a.value_ / b, a.dim_);
}

bool operator<(const Quantity& a, const Quantity& b) {
  require_same(a, b, "compare");
  return a.value_ < b.value_;
}
bool operator>(const Quantity& a, const Quantity& b) { return b < a; }
bool operator<=(const Quantity& a, const Quantity& b) { return !(b < a); }
bool operator>=(const Quantity& a, const Quantity& b) { return !(a < b); }
bool operator==(const Quantity& a, const Quantity& b) {
  require_same(a, b, "compare");
  return a.value_ == b.value_;
}

Quantity sqrt(const Quantity& q) {
  if (q.value() < 0.0) {
    throw DomainError(fmt::format("square root of negative value {} [{}]", q.value(), q.dim().to_string()));
  }
  return Quantity(std::sqrt(q.value()), q.dim().sqrt());
}

Quantity pow(const Quantity& q, int num, int den) {
  const Dimension d = q.dim().pow(num, den);
  if (den % 2 == 0 && q.value() < 0.0) {
    throw DomainError(fmt::format("even root of negative value {}", q.value()));
  }
  return Quantity(std::pow(q.value(), static_cast<double>(num) / den), d);
}

Quantity abs(const Quantity& q) { return Quantity(std::fabs(q.value()), q.dim()); }

double relative_difference(const Quantity& a, const Quantity& b) {
  require_same(a, b, "compare");
  const double scale = std::max(std::fabs(a.value()), std::fabs(b.value()));
  if (scale == 0.0) return 0.0;
  return std::fabs(a.value() - b.value()) / scale;
}

const Constants& constants() {
  static const Constants c = [] {
    const Quantity h(6.6260755e-34, dim::kAction);
    return Constants{
        .h = h,
        .hbar = h / (2.0 * std::numbers::pi),
        .kappa = Quantity(1.38e-23, dim::kBoltzmann),
        .coulomb_k = Quantity(9e9, dim::kCoulombConstant),
        .elementary_charge = coulombs(1.6e-19),
        .proton_mass = kilograms(1.67e-27),
    };
  }();
  return c;
}

Quantity thermal_wavelength(const Quantity& mass, const Quantity& temperature) {
  if (mass.in(dim::kMass) <= 0.0) throw DomainError("thermal wavelength needs a positive mass");
  if (temperature.in(dim::kTemperature) <= 0.0) throw DomainError("thermal wavelength needs a positive temperature");
  const Constants& c = constants();
  return c.hbar / sqrt(mass * c.kappa * temperature);
}

}  // namespace decohere
