// SPDX-License-Identifier: Apache-2.0
#include "opslicer/perm.hpp"

#include <algorithm>
#include <numeric>

#include "opslicer/error.hpp"

namespace opslicer {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0U);
}

Perm Perm::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v]) throw DomainError("not a permutation");
    seen[v] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_one_line(const std::vector<std::size_t>& images) {
  std::vector<std::uint32_t> zero;
  zero.reserve(images.size());
  for (auto v : images) {
    if (v == 0) throw DomainError("one-line permutation entries are 1-based");
    zero.push_back(static_cast<std::uint32_t>(v - 1));
  }
  return from_images(std::move(zero));
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (auto v : cycle) {
      if (v == 0 || v > degree) {
        throw DomainError("cycle point " + std::to_string(v) + " outside 1.." +
                          std::to_string(degree));
      }
      if (used[v - 1]) throw DomainError("cycles are not disjoint");
      used[v - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      p.images_[cycle[i] - 1] = static_cast<std::uint32_t>(cycle[(i + 1) % cycle.size()] - 1);
    }
  }
  return p;
}

Perm Perm::parse(std::string_view text, std::size_t degree) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError("permutation: " + what, 1, pos + 1);
  };
  skip();
  if (pos < text.size() && text[pos] == '0') {
    ++pos;
    skip();
    if (pos != text.size()) fail("unexpected text after 0");
    return Perm(degree);
  }
  std::vector<std::vector<std::size_t>> cycles;
  while (true) {
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      skip();
      if (pos == text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] < '0' || text[pos] > '9') fail("expected a point");
      std::size_t v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
      }
      cycle.push_back(v);
    }
    if (cycle.empty()) fail("empty cycle");
    cycles.push_back(std::move(cycle));
  }
  if (cycles.empty()) fail("empty permutation");
  try {
    return from_cycles(degree, cycles);
  } catch (const DomainError& e) {
    throw ParseError(std::string("permutation: ") + e.what(), 1, 1);
  }
}

std::vector<std::size_t> Perm::one_line() const {
  std::vector<std::size_t> out;
  out.reserve(images_.size());
  for (auto v : images_) out.push_back(v + 1);
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return p;
}

std::string Perm::to_string() const {
  if (is_identity()) return "0";
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  return out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw DomainError("permutation degrees differ");
  Perm p;
  p.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) p.images_[i] = b.images_[a.images_[i]];
  return p;
}

std::vector<Perm> all_perms(std::size_t degree) {
  std::vector<std::uint32_t> v(degree);
  std::iota(v.begin(), v.end(), 0U);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Perm direct_sum(const std::vector<Perm>& parts) {
  std::vector<std::uint32_t> images;
  std::uint32_t offset = 0;
  for (const auto& p : parts) {
    for (auto v : p.images()) images.push_back(v + offset);
    offset += static_cast<std::uint32_t>(p.degree());
  }
  return Perm::from_images(std::move(images));
}

Perm block_perm(const Perm& s, const std::vector<std::size_t>& sizes) {
  if (s.degree() != sizes.size()) throw DomainError("block_perm: one size per block required");
  const std::size_t m = sizes.size();
  const Perm inv = s.inverse();
  // Start offset of each target block, laid out in target order.
  std::vector<std::size_t> target_start(m, 0);
  std::size_t acc = 0;
  for (std::size_t t = 0; t < m; ++t) {
    target_start[t] = acc;
    acc += sizes[inv(t)];
  }
  std::vector<std::uint32_t> images(acc);
  std::size_t src = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < sizes[i]; ++r) {
      images[src++] = static_cast<std::uint32_t>(target_start[s(i)] + r);
    }
  }
  return Perm::from_images(std::move(images));
}

}  // namespace opslicer
