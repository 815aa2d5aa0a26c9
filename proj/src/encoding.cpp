#include "ecodrive/encoding.hpp"

#include <algorithm>
#include <cmath>

#include "ecodrive/error.hpp"

namespace ecodrive {

namespace {

std::uint64_t low_mask(std::size_t width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace

Chromosome::Chromosome(std::uint64_t bits, std::size_t width) : bits_(bits), width_(width) {
  if (width > kMaxBits) throw Error(ErrorCode::LengthMismatch, "chromosome wider than 64 bits");
  if ((bits & ~low_mask(width)) != 0) {
    throw Error(ErrorCode::LengthMismatch, "chromosome value does not fit its width");
  }
}

Chromosome Chromosome::from_string(std::string_view text) {
  if (text.size() > kMaxBits) throw Error(ErrorCode::LengthMismatch, "chromosome string too long");
  std::uint64_t bits = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw Error(ErrorCode::LengthMismatch, "chromosome string must contain only 0 and 1");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return Chromosome(bits, text.size());
}

bool Chromosome::bit(std::size_t pos) const { return (bits_ >> (width_ - 1 - pos)) & 1u; }

Chromosome Chromosome::with_flipped(std::size_t pos) const {
  Chromosome out = *this;
  out.bits_ ^= std::uint64_t{1} << (width_ - 1 - pos);
  return out;
}

std::uint64_t Chromosome::slice(std::size_t pos, std::size_t width) const {
  return (bits_ >> (width_ - pos - width)) & low_mask(width);
}

std::string Chromosome::to_string() const {
  std::string s(width_, '0');
  for (std::size_t i = 0; i < width_; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

double FieldDecode::value(std::uint64_t index, std::size_t width) const {
  const auto r = static_cast<double>(index);
  switch (kind) {
    case Kind::Rate: return scale * (r + 1.0);
    case Kind::Speed: return scale * r / static_cast<double>(low_mask(width));
    case Kind::SpeedNonZero: return scale * (r + 1.0) / static_cast<double>(low_mask(width) + 1);
  }
  return 0.0;
}

void Layout::validate() const {
  std::size_t sum = 0;
  for (const auto& f : fields) {
    if (f.width == 0) throw Error(ErrorCode::LayoutMismatch, "field '" + f.name + "' has width 0");
    sum += f.width;
  }
  if (sum != total_bits) throw Error(ErrorCode::LayoutMismatch, "field widths do not sum to total");
  if (total_bits == 0 || total_bits > Chromosome::kMaxBits) {
    throw Error(ErrorCode::LayoutMismatch, "layout must have 1..64 bits");
  }
}

std::size_t Layout::offset(std::size_t i) const {
  std::size_t off = 0;
  for (std::size_t k = 0; k < i; ++k) off += fields[k].width;
  return off;
}

Layout case1_layout() {
  using K = FieldDecode::Kind;
  return Layout{LayoutKind::CaseI,
                14,
                {{"alpha", 4, {K::Rate, 0.5}},
                 {"beta", 4, {K::Rate, 0.5}},
                 {"v", 6, {K::Speed, 50.4}}}};
}

Layout case2_layout() {
  using K = FieldDecode::Kind;
  return Layout{LayoutKind::CaseII,
                32,
                {{"alpha1", 4, {K::Rate, 0.5}},
                 {"v1", 6, {K::Speed, 75.0}},
                 {"beta1", 4, {K::Rate, 0.5}},
                 {"v2", 4, {K::SpeedNonZero, 25.0}},
                 {"alpha2", 4, {K::Rate, 0.5}},
                 {"v3", 6, {K::Speed, 75.0}},
                 {"beta2", 4, {K::Rate, 0.5}}}};
}

Layout raw_layout(std::size_t width) {
  Layout l{LayoutKind::Generic, width, {{"raw", width, {FieldDecode::Kind::Speed, 1.0}}}};
  l.validate();
  return l;
}

std::vector<double> field_values(const Chromosome& c, const Layout& l) {
  if (c.size() != l.total_bits) {
    throw Error(ErrorCode::LayoutMismatch, "chromosome has " + std::to_string(c.size()) +
                                               " bits, layout expects " +
                                               std::to_string(l.total_bits));
  }
  std::vector<double> out;
  out.reserve(l.fields.size());
  std::size_t pos = 0;
  for (const auto& f : l.fields) {
    out.push_back(f.decode.value(c.slice(pos, f.width), f.width));
    pos += f.width;
  }
  return out;
}

CandidateParams decode(const Chromosome& c, const Layout& l) {
  const auto v = field_values(c, l);
  auto mps = [](double mph) { return units::mph_to_mps(mph); };
  switch (l.kind) {
    case LayoutKind::CaseI:
      return CaseIParams{mps(v[0]), mps(v[1]), mps(v[2])};
    case LayoutKind::CaseII:
      return CaseIIParams{mps(v[0]), mps(v[1]), mps(v[2]), mps(v[3]),
                          mps(v[4]), mps(v[5]), mps(v[6])};
    case LayoutKind::Generic:
      break;
  }
  throw Error(ErrorCode::LayoutMismatch, "generic layouts have no parameter decoding");
}

Chromosome encode(const CandidateParams& params, const Layout& l) {
  std::vector<double> values;
  if (const auto* p1 = std::get_if<CaseIParams>(&params); p1 && l.kind == LayoutKind::CaseI) {
    values = {p1->alpha, p1->beta, p1->speed};
  } else if (const auto* p2 = std::get_if<CaseIIParams>(&params);
             p2 && l.kind == LayoutKind::CaseII) {
    values = {p2->alpha1, p2->v1, p2->beta1, p2->v2, p2->alpha2, p2->v3, p2->beta2};
  } else {
    throw Error(ErrorCode::LayoutMismatch, "parameters do not match the layout");
  }

  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < l.fields.size(); ++i) {
    const auto& f = l.fields[i];
    const double target = units::mps_to_mph(values[i]);
    // Grids are uniform, so invert the affine map and verify the hit.
    const double top = f.decode.value(low_mask(f.width), f.width);
    const double bottom = f.decode.value(0, f.width);
    const double step = (top - bottom) / static_cast<double>(low_mask(f.width));
    const double guess = std::round((target - bottom) / step);
    if (guess < 0 || guess > static_cast<double>(low_mask(f.width))) {
      throw Error(ErrorCode::LayoutMismatch, "value for '" + f.name + "' is off its grid");
    }
    const auto index = static_cast<std::uint64_t>(guess);
    const double hit = f.decode.value(index, f.width);
    if (std::abs(hit - target) > 1e-9 * std::max(1.0, std::abs(target))) {
      throw Error(ErrorCode::LayoutMismatch, "value for '" + f.name + "' is off its grid");
    }
    bits = (bits << f.width) | index;
  }
  return Chromosome(bits, l.total_bits);
}

Chromosome random_chromosome(const Layout& l, Rng& rng) {
  return Chromosome(rng() & low_mask(l.total_bits), l.total_bits);
}

ChromosomeRange enumerate_all(const Layout& l, std::size_t max_bits) {
  const std::size_t limit = std::min(max_bits, kMaxEnumerationBits);
  if (l.total_bits > limit) {
    throw Error(ErrorCode::SpaceTooLarge, std::to_string(l.total_bits) +
                                              "-bit layout exceeds the enumeration guard of " +
                                              std::to_string(limit) + " bits");
  }
  return ChromosomeRange(l.total_bits, std::uint64_t{1} << l.total_bits);
}

}  // namespace ecodrive
