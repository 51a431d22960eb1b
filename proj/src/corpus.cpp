#include "pentagon/corpus.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace pentagon {

namespace {

template <typename Op>
Group build(int n, std::string name, Op op) {
  Magma m;
  m.n = n;
  m.name = std::move(name);
  m.table.reserve(static_cast<std::size_t>(n) * n);
  for (element_t i = 0; i < n; ++i)
    for (element_t j = 0; j < n; ++j) m.table.push_back(op(i, j));
  return group_from_magma(m);
}

using Word = std::vector<element_t>;

// All permutations of 0..degree-1 as words, in lexicographic order; the word
// at index k has lex rank k, so composition reduces to a rank lookup.
std::vector<Word> permutation_words(int degree) {
  Word w(degree);
  std::iota(w.begin(), w.end(), 0);
  std::vector<Word> words;
  do {
    words.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return words;
}

int rank_of(const std::vector<Word>& words, const Word& w) {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  return static_cast<int>(it - words.begin());
}

Word compose(const Word& p, const Word& q) {
  Word r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Group group_from_words(int degree, std::vector<Word> member_words, std::string name) {
  std::sort(member_words.begin(), member_words.end());
  Magma m;
  m.n = static_cast<int>(member_words.size());
  m.name = std::move(name);
  m.table.reserve(static_cast<std::size_t>(m.n) * m.n);
  for (const Word& p : member_words)
    for (const Word& q : member_words)
      m.table.push_back(rank_of(member_words, compose(p, q)));
  return group_from_magma(m);
}

}  // namespace

Group cyclic(int n) {
  if (n < 1 || n > 128) fail(errc::precondition, "cyclic order out of range");
  return build(n, "z" + std::to_string(n),
               [n](element_t i, element_t j) { return (i + j) % n; });
}

Group trivial_group() { return cyclic(1); }

Group klein_four() {
  return build(4, "v4", [](element_t i, element_t j) { return i ^ j; });
}

Group symmetric(int degree) {
  if (degree < 1 || degree > 5)
    fail(errc::precondition, "symmetric degree out of range");
  return group_from_words(degree, permutation_words(degree),
                          "s" + std::to_string(degree));
}

Group dihedral_8() {
  // Corner words of the square 0-1-2-3: closure of a quarter turn and the
  // 0-2 diagonal reflection inside S4.
  std::set<Word> members{{0, 1, 2, 3}};
  const Word rotate{1, 2, 3, 0};
  const Word reflect{0, 3, 2, 1};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<Word> next = members;
    for (const Word& w : members) {
      next.insert(compose(rotate, w));
      next.insert(compose(reflect, w));
    }
    if (next.size() != members.size()) {
      members = std::move(next);
      grew = true;
    }
  }
  return group_from_words(4, {members.begin(), members.end()}, "d4");
}

Group quaternion_8() {
  // Index = 2*axis + (sign < 0), axes ordered 1, i, j, k.
  struct Basis {
    int axis;
    int sign;
  };
  static constexpr std::array<std::array<Basis, 4>, 4> product{{
      {{{0, 1}, {1, 1}, {2, 1}, {3, 1}}},      // 1 * {1,i,j,k}
      {{{1, 1}, {0, -1}, {3, 1}, {2, -1}}},    // i * {1,i,j,k}
      {{{2, 1}, {3, -1}, {0, -1}, {1, 1}}},    // j * {1,i,j,k}
      {{{3, 1}, {2, 1}, {1, -1}, {0, -1}}},    // k * {1,i,j,k}
  }};
  return build(8, "q8", [](element_t i, element_t j) {
    const Basis b = product[i / 2][j / 2];
    const int sign = (i % 2 ? -1 : 1) * (j % 2 ? -1 : 1) * b.sign;
    return 2 * b.axis + (sign < 0 ? 1 : 0);
  });
}

Group z2_times_z4() {
  return build(8, "z2xz4", [](element_t i, element_t j) {
    return 4 * ((i / 4 + j / 4) % 2) + (i % 4 + j % 4) % 4;
  });
}

Group elementary_8() {
  return build(8, "z2cube", [](element_t i, element_t j) { return i ^ j; });
}

std::vector<Group> corpus_order_le_8() {
  std::vector<Group> out;
  for (int n = 2; n <= 8; ++n) out.push_back(cyclic(n));
  out.push_back(klein_four());
  out.push_back(symmetric(3));
  out.push_back(dihedral_8());
  out.push_back(quaternion_8());
  out.push_back(z2_times_z4());
  out.push_back(elementary_8());
  return out;
}

Group group_by_name(const std::string& name) {
  if (name == "v4") return klein_four();
  if (name == "s3") return symmetric(3);
  if (name == "s4") return symmetric(4);
  if (name == "d4") return dihedral_8();
  if (name == "q8") return quaternion_8();
  if (name == "z2xz4") return z2_times_z4();
  if (name == "z2cube") return elementary_8();
  if (name.size() > 1 && name[0] == 'z' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos)
    return cyclic(std::stoi(name.substr(1)));
  fail(errc::precondition, "unknown group name: " + name);
}

}  // namespace pentagon
