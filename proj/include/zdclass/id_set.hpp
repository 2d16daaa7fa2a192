#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace zdclass {

/// Fixed-universe set of dense ids {0..size-1}, stored as a bitset.
///
/// The word vector is the canonical serialization: two sets over the same
/// universe are equal iff their words are equal, so it doubles as the
/// annihilator fingerprint.
class IdSet {
public:
  IdSet() = default;
  explicit IdSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  void insert(std::size_t id) { words_[id >> 6] |= word_bit(id); }
  void erase(std::size_t id) { words_[id >> 6] &= ~word_bit(id); }
  bool contains(std::size_t id) const {
    return (words_[id >> 6] & word_bit(id)) != 0;
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_)
      total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0)
        return false;
    return true;
  }

  bool is_subset_of(const IdSet &other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0)
        return false;
    return true;
  }

  bool is_proper_subset_of(const IdSet &other) const {
    return is_subset_of(other) && *this != other;
  }

  IdSet &operator|=(const IdSet &other) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= other.words_[i];
    return *this;
  }

  /// Smallest element of this set that is not in `other`.
  std::optional<std::size_t> first_not_in(const IdSet &other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (const auto w = words_[i] & ~other.words_[i]; w != 0)
        return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
    return std::nullopt;
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t id) { out.push_back(id); });
    return out;
  }

  template <typename F> void for_each(F &&f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        f(i * 64 + static_cast<std::size_t>(bit));
        w &= w - 1;
      }
    }
  }

  const std::vector<std::uint64_t> &words() const noexcept { return words_; }

  friend bool operator==(const IdSet &, const IdSet &) = default;
  friend auto operator<=>(const IdSet &a, const IdSet &b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0)
      return c;
    return a.words_ <=> b.words_;
  }

private:
  static std::uint64_t word_bit(std::size_t id) {
    return std::uint64_t{1} << (id & 63);
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace zdclass
