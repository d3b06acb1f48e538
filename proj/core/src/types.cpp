#include "esum/types.hpp"

#include "esum/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace esum {

SumSignature::SumSignature(std::vector<HarmonicFactor> f, int q, bool q_barred)
    : factors(std::move(f)), outer_power(q), outer_barred(q_barred) {
  for (const auto& h : factors) {
    if (h.order < 1) throw std::invalid_argument("SumSignature: factor order must be >= 1");
  }
  if (outer_power < 1) throw std::invalid_argument("SumSignature: outer power must be >= 1");
  std::sort(factors.begin(), factors.end());
  ensure_convergent();
}

bool SumSignature::convergent() const {
  return outer_barred ? outer_power >= 1 : outer_power >= 2;
}

void SumSignature::ensure_convergent() const {
  if (!convergent()) {
    throw divergence_error("divergent Euler sum " + str());
  }
}

int SumSignature::weight() const {
  int w = outer_power;
  for (const auto& h : factors) w += h.order;
  return w;
}

std::string SumSignature::str() const {
  std::string s = "S ";
  if (factors.empty()) s += "0";
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(factors[i].order);
    if (factors[i].barred) s += "b";
  }
  s += " | " + std::to_string(outer_power);
  if (outer_barred) s += "b";
  return s;
}

Composition::Composition(std::vector<ZetaSlot> s) : slots(std::move(s)) {
  if (slots.empty()) throw std::invalid_argument("Composition: needs at least one slot");
  for (const auto& slot : slots) {
    if (slot.order < 1) throw std::invalid_argument("Composition: slot order must be >= 1");
  }
}

Composition Composition::plain(const std::vector<int>& orders) {
  std::vector<ZetaSlot> s;
  s.reserve(orders.size());
  for (int o : orders) s.push_back({o, false});
  return Composition(std::move(s));
}

bool Composition::convergent() const {
  return slots.front().order >= 2 || slots.front().barred;
}

void Composition::ensure_convergent() const {
  if (!convergent()) {
    throw divergence_error("divergent multiple zeta value " + str());
  }
}

int Composition::weight() const {
  int w = 0;
  for (const auto& slot : slots) w += slot.order;
  return w;
}

std::string Composition::str(bool star) const {
  std::string s = star ? "zstar(" : "zeta(";
  for (size_t i = 0; i < slots.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(slots[i].order);
    if (slots[i].barred) s += "b";
  }
  s += ")";
  return s;
}

void EvalConfig::validate() const {
  if (target_digits < 6) throw std::invalid_argument("target_digits must be >= 6");
  if (working_digits < target_digits + 10) {
    throw std::invalid_argument("working_digits must be >= target_digits + 10");
  }
  if (max_terms < 10'000) throw std::invalid_argument("max_terms must be >= 10000");
  if (em_order < 2 || em_order > 12) throw std::invalid_argument("em_order must be in [2, 12]");
}

EngineParams EvalConfig::engine_params() const {
  validate();
  EngineParams p;
  p.precision_digits = working_digits + 25;
  int by_digits = int(std::ceil(double(p.precision_digits + 5) / 2.2));
  p.jmax = std::max(2 * em_order + 4, by_digits);
  p.amax = working_digits > 80 ? 16 : 12;
  double n0_f = std::pow(10.0, double(p.precision_digits + 5) / double(p.jmax));
  p.n0 = std::max<long>(420, long(std::ceil(n0_f)));
  if (p.n0 > max_terms) p.n0 = long(max_terms);
  return p;
}

void EvalConfig::poll_deadline() const {
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    throw timeout_error("evaluation deadline exceeded");
  }
}

}  // namespace esum
