#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace heckeforge {

inline constexpr std::size_t kMaxRank = 8;

// Integer vector in X_*(T), stored inline.  Entries past rank() are zero so
// that equality, ordering and hashing can look at the whole array.
class Cocharacter {
 public:
  Cocharacter() = default;
  explicit Cocharacter(std::span<const int> coords);
  Cocharacter(std::initializer_list<int> coords);
  static Cocharacter zero(std::size_t rank);

  std::size_t rank() const { return rank_; }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  std::span<const int> coords() const { return {coords_.data(), rank_}; }
  std::vector<int> to_vector() const { return {coords_.begin(), coords_.begin() + rank_}; }
  bool is_zero() const;

  Cocharacter& operator+=(const Cocharacter& rhs);
  Cocharacter& operator-=(const Cocharacter& rhs);
  Cocharacter operator-() const;
  friend Cocharacter operator+(Cocharacter a, const Cocharacter& b) { return a += b; }
  friend Cocharacter operator-(Cocharacter a, const Cocharacter& b) { return a -= b; }
  friend Cocharacter operator*(int k, Cocharacter a);

  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
  friend auto operator<=>(const Cocharacter&, const Cocharacter&) = default;

  std::size_t hash() const;
  std::string to_string() const;  // "1,-2"
  friend std::ostream& operator<<(std::ostream& os, const Cocharacter& c);

 private:
  std::array<int, kMaxRank> coords_{};
  std::uint8_t rank_ = 0;
};

// <x, y> for a character x (plain integer vector) and a cocharacter y.
int pair(std::span<const int> character, const Cocharacter& y);

inline void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace heckeforge

template <>
struct std::hash<heckeforge::Cocharacter> {
  std::size_t operator()(const heckeforge::Cocharacter& c) const noexcept { return c.hash(); }
};
