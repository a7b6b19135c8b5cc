#include "loopbraid/pc_automorphism.hpp"

#include <cstdlib>
#include <iostream>
#include <numeric>

#include "loopbraid/errors.hpp"

namespace loopbraid {

namespace {

void check_index(int n, int i, int max, const char* what) {
  if (n < 1) throw DomainError("strand count must be positive");
  if (i < 1 || i > max) {
    throw DomainError(std::string(what) + " index " + std::to_string(i) + " outside 1.." +
                      std::to_string(max));
  }
}

std::vector<FreeWord> identity_images(int n) {
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images.push_back(FreeWord::generator(n, i));
  return images;
}

FreeWord word(int n, std::initializer_list<Letter> letters) {
  return FreeWord::reduce(n, std::span<const Letter>(letters.begin(), letters.size()));
}

std::string join(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(values[k]);
  }
  return out + "]";
}

}  // namespace

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Permutation compose_permutations(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DomainError("permutation size mismatch");
  Permutation out(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) out[k] = p[static_cast<std::size_t>(q[k] - 1)];
  return out;
}

Permutation invert_permutation(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[static_cast<std::size_t>(p[k] - 1)] = static_cast<int>(k + 1);
  return out;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v - 1)]) return false;
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

std::optional<PCShape> recognize_pc_shape(int rank, const std::vector<FreeWord>& images) {
  if (static_cast<int>(images.size()) != rank) return std::nullopt;
  PCShape shape;
  shape.permutation.reserve(images.size());
  for (const FreeWord& image : images) {
    if (image.rank() != rank) return std::nullopt;
    auto conj = as_conjugate_of_generator(image);
    if (!conj) return std::nullopt;
    shape.permutation.push_back(conj->index);
    shape.signs.push_back(conj->sign);
    shape.conjugators.push_back(std::move(conj->conjugator));
  }
  if (!is_permutation(shape.permutation)) return std::nullopt;
  return shape;
}

PCAut PCAut::from_images(int rank, std::vector<FreeWord> images) {
  auto shape = recognize_pc_shape(rank, images);
  if (!shape) throw DomainError("images are not of permutation-conjugacy shape");
  return PCAut(rank, std::move(images), std::move(*shape));
}

PCAut PCAut::identity(int n) {
  if (n < 1) throw DomainError("strand count must be positive");
  return from_images(n, identity_images(n));
}

PCAut PCAut::sigma(int n, int i) {
  check_index(n, i, n - 1, "sigma");
  auto images = identity_images(n);
  images[static_cast<std::size_t>(i - 1)] = FreeWord::generator(n, i + 1);
  images[static_cast<std::size_t>(i)] = word(n, {{i + 1, -1}, {i, 1}, {i + 1, 1}});
  return from_images(n, std::move(images));
}

PCAut PCAut::sigma_inverse(int n, int i) {
  check_index(n, i, n - 1, "sigma");
  auto images = identity_images(n);
  images[static_cast<std::size_t>(i - 1)] = word(n, {{i, 1}, {i + 1, 1}, {i, -1}});
  images[static_cast<std::size_t>(i)] = FreeWord::generator(n, i);
  return from_images(n, std::move(images));
}

PCAut PCAut::rho(int n, int i) {
  check_index(n, i, n - 1, "rho");
  auto images = identity_images(n);
  images[static_cast<std::size_t>(i - 1)] = FreeWord::generator(n, i + 1);
  images[static_cast<std::size_t>(i)] = FreeWord::generator(n, i);
  return from_images(n, std::move(images));
}

PCAut PCAut::tau(int n, int i) {
  check_index(n, i, n, "tau");
  auto images = identity_images(n);
  images[static_cast<std::size_t>(i - 1)] = FreeWord::generator(n, i, -1);
  return from_images(n, std::move(images));
}

PCAut PCAut::alpha(int n, int i, int j) {
  check_index(n, i, n, "alpha");
  check_index(n, j, n, "alpha");
  if (i == j) throw DomainError("alpha requires distinct indices");
  auto images = identity_images(n);
  images[static_cast<std::size_t>(i - 1)] = word(n, {{j, -1}, {i, 1}, {j, 1}});
  return from_images(n, std::move(images));
}

FreeWord apply(const PCAut& f, const FreeWord& u) {
  if (f.rank() != u.rank()) throw DomainError("automorphism and word have different ranks");
  std::vector<Letter> raw;
  for (const Letter& letter : u.letters()) {
    const FreeWord& image = f.image(letter.index);
    if (letter.exponent > 0) {
      raw.insert(raw.end(), image.letters().begin(), image.letters().end());
    } else {
      for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it) {
        raw.push_back(it->inverse());
      }
    }
  }
  return FreeWord::reduce(u.rank(), raw);
}

PCAut compose(const PCAut& f, const PCAut& g) {
  if (f.rank() != g.rank()) throw DomainError("automorphism rank mismatch");
  std::vector<FreeWord> images;
  images.reserve(g.images().size());
  for (const FreeWord& image : g.images()) images.push_back(apply(f, image));
  auto shape = recognize_pc_shape(f.rank(), images);
  if (!shape) {
    // The PC automorphisms form a group; reaching this is a library bug.
    std::cerr << "loopbraid: composition left the permutation-conjugacy group\n";
    std::abort();
  }
  return PCAut(f.rank(), std::move(images), std::move(*shape));
}

bool equals(const PCAut& f, const PCAut& g) {
  if (f.rank() != g.rank()) throw DomainError("automorphism rank mismatch");
  return f == g;
}

std::string format(const PCAut& f) {
  std::string out;
  for (int i = 1; i <= f.rank(); ++i) {
    out += "x_" + std::to_string(i) + " -> " + format(f.image(i)) + "\n";
  }
  out += "perm: " + join(f.permutation()) + "\n";
  out += "signs: " + join(f.signs()) + "\n";
  return out;
}

}  // namespace loopbraid
