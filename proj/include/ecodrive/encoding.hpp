#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ecodrive/cycle.hpp"

namespace ecodrive {

using Rng = std::mt19937_64;

// Fixed-width bit string, at most 64 bits. Position 0 is the leftmost (most
// significant) bit; `bits` holds the string as an unsigned integer, so
// comparing `bits` orders chromosomes by their unsigned value.
class Chromosome {
 public:
  static constexpr std::size_t kMaxBits = 64;

  Chromosome() = default;
  Chromosome(std::uint64_t bits, std::size_t width);

  // Parses a 0/1 string, MSB first. Throws LengthMismatch on other chars.
  static Chromosome from_string(std::string_view text);

  std::size_t size() const { return width_; }
  std::uint64_t value() const { return bits_; }
  bool bit(std::size_t pos) const;
  Chromosome with_flipped(std::size_t pos) const;

  // Bits [pos, pos + width) as an unsigned integer.
  std::uint64_t slice(std::size_t pos, std::size_t width) const;

  std::string to_string() const;

  friend bool operator==(const Chromosome&, const Chromosome&) = default;

 private:
  std::uint64_t bits_ = 0;
  std::size_t width_ = 0;
};

// Maps a field's unsigned index r (width w) onto a value grid in reference
// units (mph or mph/s).
//   Rate:         step * (r + 1)
//   Speed:        upper * r / (2^w - 1)     covers [0, upper]
//   SpeedNonZero: upper * (r + 1) / 2^w     covers (0, upper]
struct FieldDecode {
  enum class Kind { Rate, Speed, SpeedNonZero };
  Kind kind;
  double scale;  // step for Rate, upper bound otherwise

  double value(std::uint64_t index, std::size_t width) const;
};

struct Field {
  std::string name;
  std::size_t width;
  FieldDecode decode;

  std::uint64_t cardinality() const { return std::uint64_t{1} << width; }
};

enum class LayoutKind { CaseI, CaseII, Generic };

struct Layout {
  LayoutKind kind = LayoutKind::Generic;
  std::size_t total_bits = 0;
  std::vector<Field> fields;

  // Throws LayoutMismatch if widths do not add up or exceed 64 bits.
  void validate() const;
  // Bit offset of field i.
  std::size_t offset(std::size_t i) const;
};

// [alpha:4][beta:4][V:6]; rates 0.5..8 mph/s, V on a 0.8 mph grid up to 50.4.
Layout case1_layout();
// [alpha1:4][V1:6][beta1:4][V2:4][alpha2:4][V3:6][beta2:4]; V1, V3 up to
// 75 mph, V2 in (0, 25] mph.
Layout case2_layout();
// Generic layout with `width` raw bits and no decode to CandidateParams.
Layout raw_layout(std::size_t width);

// Field values in reference units (mph, mph/s), in layout order.
std::vector<double> field_values(const Chromosome& c, const Layout& l);

// Converts to SI CandidateParams. Throws LayoutMismatch for a size mismatch
// or a Generic layout.
CandidateParams decode(const Chromosome& c, const Layout& l);

// Inverse of decode. Throws LayoutMismatch when a value is off its grid
// (beyond 1e-9 relative) or the variant does not match the layout.
Chromosome encode(const CandidateParams& params, const Layout& l);

Chromosome random_chromosome(const Layout& l, Rng& rng);

// Every chromosome of a layout in ascending unsigned order.
class ChromosomeRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Chromosome;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Chromosome;

    iterator() = default;
    iterator(std::uint64_t index, std::size_t width) : index_(index), width_(width) {}

    Chromosome operator*() const { return Chromosome(index_, width_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    std::uint64_t index_ = 0;
    std::size_t width_ = 0;
  };

  ChromosomeRange(std::size_t width, std::uint64_t count) : width_(width), count_(count) {}

  iterator begin() const { return {0, width_}; }
  iterator end() const { return {count_, width_}; }
  std::uint64_t size() const { return count_; }

 private:
  std::size_t width_;
  std::uint64_t count_;
};

// Default limit keeps 2^32-sized layouts behind an explicit opt-in.
inline constexpr std::size_t kDefaultEnumerationGuard = 24;
// Hard ceiling no override can raise.
inline constexpr std::size_t kMaxEnumerationBits = 34;

// Throws SpaceTooLarge when total_bits exceeds min(max_bits,
// kMaxEnumerationBits).
ChromosomeRange enumerate_all(const Layout& l, std::size_t max_bits = kDefaultEnumerationGuard);

}  // namespace ecodrive
