#include "heckeforge/cocharacter.hpp"

#include <ostream>
#include <stdexcept>

namespace heckeforge {

Cocharacter::Cocharacter(std::span<const int> coords) {
  if (coords.size() > kMaxRank) throw std::length_error("cocharacter rank exceeds kMaxRank");
  rank_ = static_cast<std::uint8_t>(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = coords[i];
}

Cocharacter::Cocharacter(std::initializer_list<int> coords)
    : Cocharacter(std::span<const int>(coords.begin(), coords.size())) {}

Cocharacter Cocharacter::zero(std::size_t rank) {
  Cocharacter c;
  if (rank > kMaxRank) throw std::length_error("cocharacter rank exceeds kMaxRank");
  c.rank_ = static_cast<std::uint8_t>(rank);
  return c;
}

bool Cocharacter::is_zero() const {
  for (std::size_t i = 0; i < rank_; ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

Cocharacter& Cocharacter::operator+=(const Cocharacter& rhs) {
  for (std::size_t i = 0; i < kMaxRank; ++i) coords_[i] += rhs.coords_[i];
  if (rhs.rank_ > rank_) rank_ = rhs.rank_;
  return *this;
}

Cocharacter& Cocharacter::operator-=(const Cocharacter& rhs) {
  for (std::size_t i = 0; i < kMaxRank; ++i) coords_[i] -= rhs.coords_[i];
  if (rhs.rank_ > rank_) rank_ = rhs.rank_;
  return *this;
}

Cocharacter Cocharacter::operator-() const {
  Cocharacter r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Cocharacter operator*(int k, Cocharacter a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

std::size_t Cocharacter::hash() const {
  std::size_t seed = rank_;
  for (std::size_t i = 0; i < rank_; ++i) hash_mix(seed, static_cast<std::size_t>(coords_[i]));
  return seed;
}

std::string Cocharacter::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Cocharacter& c) { return os << '[' << c.to_string() << ']'; }

int pair(std::span<const int> character, const Cocharacter& y) {
  int s = 0;
  for (std::size_t i = 0; i < character.size(); ++i) s += character[i] * y[i];
  return s;
}

}  // namespace heckeforge
