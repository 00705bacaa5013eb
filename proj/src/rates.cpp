#include "lw/rates.hpp"

#include <cmath>

#include "lw/errors.hpp"

namespace lw {

RateFunction RateFunction::polylog(double alpha, double beta, double scale) {
  if (!(alpha > 0.0)) throw DomainError("polylog rate requires alpha > 0");
  RateFunction r;
  r.kind = Kind::polylog;
  r.alpha = alpha;
  r.beta = beta;
  r.scale = scale;
  return r;
}

RateFunction RateFunction::loginv(double alpha, double scale) {
  if (!(alpha > 0.0)) throw DomainError("loginv rate requires alpha > 0");
  RateFunction r;
  r.kind = Kind::loginv;
  r.alpha = alpha;
  r.scale = scale;
  return r;
}

RateFunction RateFunction::expo(double c, double a, double b, double scale) {
  if (!(c > 0.0)) throw DomainError("expo rate requires c > 0");
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("expo rate requires a in (0, 1]");
  RateFunction r;
  r.kind = Kind::expo;
  r.c = c;
  r.a = a;
  r.b = b;
  r.scale = scale;
  return r;
}

double RateFunction::eval(double n) const {
  if (!(n >= 2.0)) throw InputError("rate evaluation requires n >= 2");
  double lg = std::log2(n);
  switch (kind) {
    case Kind::polylog:
      return scale * std::pow(lg, beta) * std::pow(n, -alpha);
    case Kind::loginv:
      return scale * std::pow(lg, -alpha);
    case Kind::expo:
      return scale * std::exp2(-c * std::pow(n, a) * std::pow(lg, b));
  }
  return 0.0;  // unreachable
}

double RateFunction::monotone_from() const {
  // (log2 n)^beta n^-alpha peaks where ln n = beta / alpha.
  if (kind == Kind::polylog && beta > 0.0) {
    return std::max(2.0, std::exp(beta / alpha));
  }
  return 2.0;
}

std::string RateFunction::describe() const {
  switch (kind) {
    case Kind::polylog:
      return "polylog(alpha=" + std::to_string(alpha) + ", beta=" + std::to_string(beta) + ")";
    case Kind::loginv:
      return "loginv(alpha=" + std::to_string(alpha) + ")";
    case Kind::expo:
      return "expo(c=" + std::to_string(c) + ", a=" + std::to_string(a) +
             ", b=" + std::to_string(b) + ")";
  }
  return "";
}

GrowthFunction GrowthFunction::constant(double c) {
  if (!(c > 0.0)) throw DomainError("growth constant must be positive");
  GrowthFunction g;
  g.kind = Kind::constant;
  g.c = c;
  return g;
}

GrowthFunction GrowthFunction::linear(double c) {
  if (!(c > 0.0)) throw DomainError("growth constant must be positive");
  GrowthFunction g;
  g.kind = Kind::linear;
  g.c = c;
  return g;
}

GrowthFunction GrowthFunction::nlogn(double c) {
  if (!(c > 0.0)) throw DomainError("growth constant must be positive");
  GrowthFunction g;
  g.kind = Kind::nlogn;
  g.c = c;
  return g;
}

GrowthFunction GrowthFunction::power(double c, double p, double q) {
  if (!(c > 0.0)) throw DomainError("growth constant must be positive");
  if (p < 0.0) throw DomainError("growth power requires p >= 0");
  GrowthFunction g;
  g.kind = Kind::power;
  g.c = c;
  g.p = p;
  g.q = q;
  return g;
}

double GrowthFunction::eval(double n) const {
  if (!(n >= 2.0)) throw InputError("growth evaluation requires n >= 2");
  double lg = std::log2(n);
  switch (kind) {
    case Kind::constant:
      return c;
    case Kind::linear:
      return c * n;
    case Kind::nlogn:
      return c * n * lg;
    case Kind::power:
      return c * std::pow(n, p) * std::pow(lg, q);
  }
  return 0.0;  // unreachable
}

bool GrowthFunction::dominates_log() const {
  switch (kind) {
    case Kind::constant:
      return false;
    case Kind::linear:
    case Kind::nlogn:
      return true;
    case Kind::power:
      return p > 0.0 || (p == 0.0 && q >= 1.0);
  }
  return false;
}

double GrowthFunction::power_p() const {
  switch (kind) {
    case Kind::constant:
      return 0.0;
    case Kind::linear:
    case Kind::nlogn:
      return 1.0;
    case Kind::power:
      return p;
  }
  return 0.0;
}

double GrowthFunction::power_q() const {
  switch (kind) {
    case Kind::constant:
      return 0.0;
    case Kind::linear:
      return 0.0;
    case Kind::nlogn:
      return 1.0;
    case Kind::power:
      return q;
  }
  return 0.0;
}

std::string GrowthFunction::describe() const {
  switch (kind) {
    case Kind::constant:
      return "constant(" + std::to_string(c) + ")";
    case Kind::linear:
      return "linear(" + std::to_string(c) + ")";
    case Kind::nlogn:
      return "nlogn(" + std::to_string(c) + ")";
    case Kind::power:
      return "power(c=" + std::to_string(c) + ", p=" + std::to_string(p) +
             ", q=" + std::to_string(q) + ")";
  }
  return "";
}

}  // namespace lw
