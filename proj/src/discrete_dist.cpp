#include "corestat/discrete_dist.hpp"

#include "corestat/error.hpp"

namespace corestat {

DiscreteDist::DiscreteDist(Atoms atoms) : total_(0) {
  for (auto it = atoms.begin(); it != atoms.end();) {
    if (it->second < 0)
      throw Error(ErrorKind::InvalidArgument, "negative weight in distribution");
    if (it->second == 0) {
      it = atoms.erase(it);
    } else {
      total_ += it->second;
      ++it;
    }
  }
  if (atoms.empty())
    throw Error(ErrorKind::InvalidArgument, "distribution has no positive weight");
  atoms_ = std::move(atoms);
}

DiscreteDist DiscreteDist::point_mass(std::int64_t value) {
  return DiscreteDist(Atoms{{value, BigInt(1)}});
}

DiscreteDist DiscreteDist::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "empty uniform range");
  Atoms atoms;
  for (std::int64_t v = lo; v <= hi; ++v) atoms.emplace(v, BigInt(1));
  return DiscreteDist(std::move(atoms));
}

BigInt DiscreteDist::weight(std::int64_t value) const {
  const auto it = atoms_.find(value);
  return it == atoms_.end() ? BigInt(0) : it->second;
}

Rational DiscreteDist::probability(std::int64_t value) const {
  return Rational(weight(value), total_);
}

Rational DiscreteDist::mean() const {
  BigInt s = 0;
  for (const auto& [v, w] : atoms_) s += w * v;
  return Rational(s, total_);
}

Rational DiscreteDist::variance() const {
  // T * sum w v^2 - (sum w v)^2, over T^2.
  BigInt s1 = 0, s2 = 0;
  for (const auto& [v, w] : atoms_) {
    const BigInt wv = w * v;
    s1 += wv;
    s2 += wv * v;
  }
  return Rational(total_ * s2 - s1 * s1, total_ * total_);
}

DiscreteDist DiscreteDist::affine(std::int64_t scale, std::int64_t shift) const {
  Atoms out;
  for (const auto& [v, w] : atoms_) out[scale * v + shift] += w;
  return DiscreteDist(std::move(out));
}

DiscreteDist convolve(const DiscreteDist& a, const DiscreteDist& b) {
  DiscreteDist::Atoms out;
  for (const auto& [va, wa] : a.atoms())
    for (const auto& [vb, wb] : b.atoms()) out[va + vb] += wa * wb;
  return DiscreteDist(std::move(out));
}

}  // namespace corestat
