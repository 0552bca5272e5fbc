#include "starbound/quantity.hpp"

#include "starbound/constants.hpp"

#include <stdexcept>

namespace starbound {

const char* sym_name(Sym s) {
  switch (s) {
    case Sym::One: return "1";
    case Sym::Pi: return "pi";
    case Sym::Sqrt2: return "sqrt2";
    case Sym::Pt: return "pt";
    case Sym::ZetaPt: return "zpt";
  }
  return "?";
}

Quantity Quantity::of(Sym s, const Rational& coef) {
  Quantity q;
  q[s] = coef;
  return q;
}

bool Quantity::is_zero() const {
  for (const auto& r : c_)
    if (r != 0) return false;
  return true;
}

bool Quantity::is_rational() const {
  for (int i = 1; i < kNumSyms; ++i)
    if (c_[i] != 0) return false;
  return true;
}

Quantity& Quantity::operator+=(const Quantity& o) {
  for (int i = 0; i < kNumSyms; ++i) c_[i] += o.c_[i];
  return *this;
}

Quantity& Quantity::operator-=(const Quantity& o) {
  for (int i = 0; i < kNumSyms; ++i) c_[i] -= o.c_[i];
  return *this;
}

Quantity& Quantity::operator*=(const Rational& k) {
  for (auto& r : c_) r *= k;
  return *this;
}

Quantity Quantity::operator-() const {
  Quantity q = *this;
  q *= -1;
  return q;
}

bool Quantity::operator==(const Quantity& o) const {
  for (int i = 0; i < kNumSyms; ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

Interval Quantity::enclose() const {
  const auto& k = constants();
  Interval r{c_[0], c_[0]};
  r = r + c_[1] * k.pi;
  r = r + c_[2] * k.sqrt2;
  r = r + c_[3] * k.pt_enc;
  r = r + c_[4] * k.zeta_pt_enc;
  return r;
}

double Quantity::value() const {
  const auto& k = constants();
  return c_[0].get_d() + c_[1].get_d() * k.pi_f + c_[2].get_d() * k.sqrt2_f + c_[3].get_d() * k.pt +
         c_[4].get_d() * k.zeta_pt;
}

std::string Quantity::str() const {
  std::string out;
  for (int i = 0; i < kNumSyms; ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += '+';
    out += to_string(c_[i]);
    if (i > 0) {
      out += '*';
      out += sym_name(static_cast<Sym>(i));
    }
  }
  return out.empty() ? "0" : out;
}

Quantity Quantity::parse(std::string_view text) {
  Quantity q;
  if (text.empty()) throw std::invalid_argument("empty quantity");
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t plus = text.find('+', pos);
    // a '+' directly after 'e'/'E' belongs to an exponent
    while (plus != std::string_view::npos && plus > pos && (text[plus - 1] == 'e' || text[plus - 1] == 'E'))
      plus = text.find('+', plus + 1);
    std::string_view part = text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
    Sym sym = Sym::One;
    if (auto star = part.find('*'); star != std::string_view::npos) {
      std::string_view name = part.substr(star + 1);
      bool found = false;
      for (int i = 1; i < kNumSyms; ++i) {
        if (name == sym_name(static_cast<Sym>(i))) {
          sym = static_cast<Sym>(i);
          found = true;
        }
      }
      if (!found) throw std::invalid_argument("unknown symbol in quantity: '" + std::string(name) + "'");
      part = part.substr(0, star);
    }
    q[sym] += parse_rational(part);
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return q;
}

}  // namespace starbound
