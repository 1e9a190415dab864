#include "t5census/triple_system.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace t5census {

namespace {

void check_sorted_triple(int a, int b, int c) {
  if (!(0 <= a && a < b && b < c && c < kMaxVertices))
    throw std::invalid_argument("triple must satisfy 0 <= a < b < c < 64");
}

std::uint64_t hex_word(const std::string& s, std::size_t pos) {
  std::uint64_t w = 0;
  auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + pos + 16, w, 16);
  if (ec != std::errc() || ptr != s.data() + pos + 16)
    throw std::invalid_argument("bad hex in edge mask");
  return w;
}

}  // namespace

std::uint64_t triple_index(int a, int b, int c) {
  check_sorted_triple(a, b, c);
  return choose3(static_cast<std::uint64_t>(c)) + choose2(static_cast<std::uint64_t>(b)) +
         static_cast<std::uint64_t>(a);
}

std::array<int, 3> triple_unrank(std::uint64_t index) {
  int c = 2;
  while (choose3(static_cast<std::uint64_t>(c) + 1) <= index) ++c;
  index -= choose3(static_cast<std::uint64_t>(c));
  int b = 1;
  while (choose2(static_cast<std::uint64_t>(b) + 1) <= index) ++b;
  index -= choose2(static_cast<std::uint64_t>(b));
  return {static_cast<int>(index), b, c};
}

std::uint64_t pair_index(int a, int b) {
  if (!(0 <= a && a < b)) throw std::invalid_argument("pair must satisfy 0 <= a < b");
  return choose2(static_cast<std::uint64_t>(b)) + static_cast<std::uint64_t>(a);
}

std::array<int, 2> pair_unrank(std::uint64_t index) {
  int b = 1;
  while (choose2(static_cast<std::uint64_t>(b) + 1) <= index) ++b;
  return {static_cast<int>(index - choose2(static_cast<std::uint64_t>(b))), b};
}

TripleSystem::TripleSystem(int n) : n_(n) {
  if (n < 3 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must be in [3, 64]");
  words_.assign((triple_count() + 63) / 64, 0);
}

TripleSystem::TripleSystem(int n, const std::vector<std::array<int, 3>>& edges) : TripleSystem(n) {
  for (const auto& e : edges) {
    check_vertex(e[2]);
    std::uint64_t t = triple_index(e[0], e[1], e[2]);
    words_[t >> 6] |= 1ULL << (t & 63);
  }
}

void TripleSystem::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

std::size_t TripleSystem::edge_count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool TripleSystem::has(int a, int b, int c) const {
  check_vertex(a);
  check_vertex(b);
  check_vertex(c);
  return has_index(triple_index(a, b, c));
}

bool TripleSystem::has_index(std::uint64_t t) const {
  if (t >= triple_count()) throw std::invalid_argument("triple index out of range");
  return (words_[t >> 6] >> (t & 63)) & 1u;
}

TripleSystem TripleSystem::with_edge(int a, int b, int c) const {
  TripleSystem out = *this;
  out.check_vertex(c);
  std::uint64_t t = triple_index(a, b, c);
  out.words_[t >> 6] |= 1ULL << (t & 63);
  return out;
}

TripleSystem TripleSystem::without_edge(int a, int b, int c) const {
  TripleSystem out = *this;
  out.check_vertex(c);
  std::uint64_t t = triple_index(a, b, c);
  out.words_[t >> 6] &= ~(1ULL << (t & 63));
  return out;
}

std::vector<std::uint64_t> TripleSystem::edge_indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(edge_count());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      int bit = std::countr_zero(w);
      out.push_back((static_cast<std::uint64_t>(wi) << 6) + static_cast<unsigned>(bit));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<std::array<int, 3>> TripleSystem::edges() const {
  std::vector<std::array<int, 3>> out;
  for (std::uint64_t t : edge_indices()) out.push_back(triple_unrank(t));
  return out;
}

std::string TripleSystem::to_hex_string() const {
  std::ostringstream os;
  os << "n=" << n_ << ";edges=";
  static const char* digits = "0123456789abcdef";
  for (std::uint64_t w : words_) {
    char buf[16];
    for (int i = 15; i >= 0; --i) {
      buf[i] = digits[w & 0xF];
      w >>= 4;
    }
    os.write(buf, 16);
  }
  return os.str();
}

std::string TripleSystem::to_triples_string() const {
  std::ostringstream os;
  os << "n=" << n_ << ";triples=";
  bool first = true;
  for (const auto& e : edges()) {
    if (!first) os << ',';
    first = false;
    os << e[0] << '-' << e[1] << '-' << e[2];
  }
  return os.str();
}

TripleSystem TripleSystem::from_string(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos || text.rfind("n=", 0) != 0)
    throw std::invalid_argument("expected n=<n>;edges=... or n=<n>;triples=...");
  int n = 0;
  {
    auto body = text.substr(2, semi - 2);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), n);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw std::invalid_argument("bad vertex count");
  }
  TripleSystem out(n);
  std::string rest = text.substr(semi + 1);
  if (rest.rfind("edges=", 0) == 0) {
    std::string hex = rest.substr(6);
    if (hex.size() != out.words_.size() * 16)
      throw std::invalid_argument("edge mask must be exactly 16 hex digits per word");
    for (std::size_t wi = 0; wi < out.words_.size(); ++wi)
      out.words_[wi] = hex_word(hex, wi * 16);
    // bits beyond C(n,3) must be zero
    std::uint64_t t = out.triple_count();
    if (t % 64 != 0 && (out.words_.back() >> (t % 64)) != 0)
      throw std::invalid_argument("edge mask has bits beyond C(n,3)");
    return out;
  }
  if (rest.rfind("triples=", 0) == 0) {
    std::string body = rest.substr(8);
    if (body.empty()) return out;
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) {
      int v[3];
      std::size_t pos = 0;
      for (int k = 0; k < 3; ++k) {
        std::size_t dash = (k < 2) ? item.find('-', pos) : item.size();
        if (dash == std::string::npos) throw std::invalid_argument("bad triple: " + item);
        auto piece = item.substr(pos, dash - pos);
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v[k]);
        if (ec != std::errc() || ptr != piece.data() + piece.size())
          throw std::invalid_argument("bad triple: " + item);
        pos = dash + 1;
      }
      if (v[2] >= n) throw std::invalid_argument("triple vertex out of range: " + item);
      std::uint64_t t = triple_index(v[0], v[1], v[2]);
      if (out.has_index(t)) throw std::invalid_argument("duplicate triple: " + item);
      out.words_[t >> 6] |= 1ULL << (t & 63);
    }
    return out;
  }
  throw std::invalid_argument("expected edges= or triples= section");
}

VertexMask OrderedPartition::y_mask() const {
  VertexMask all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  return all & ~x_mask;
}

int OrderedPartition::x_size() const { return std::popcount(x_mask); }

std::vector<int> OrderedPartition::x_vertices() const { return mask_vertices(x_mask, n); }
std::vector<int> OrderedPartition::y_vertices() const { return mask_vertices(y_mask(), n); }

OrderedPartition make_partition(int n, VertexMask x_mask) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("bad partition vertex count");
  VertexMask all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  if (x_mask & ~all) throw std::invalid_argument("x_mask has vertices outside {0..n-1}");
  return OrderedPartition{n, x_mask};
}

OrderedPartition partition_from_prefix(int n, int a) {
  if (a < 0 || a > n) throw std::invalid_argument("prefix size out of range");
  return make_partition(n, a == 0 ? 0 : (a == 64 ? ~0ULL : ((1ULL << a) - 1)));
}

PairGraph::PairGraph(int n) : n_(n) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("pair graph vertex count out of range");
  words_.assign((choose2(static_cast<std::uint64_t>(n)) + 63) / 64, 0);
}

PairGraph::PairGraph(int n, const std::vector<std::array<int, 2>>& edges) : PairGraph(n) {
  for (const auto& e : edges) add(e[0], e[1]);
}

void PairGraph::add(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a < 0 || b >= n_ || a == b) throw std::invalid_argument("pair out of range");
  std::uint64_t t = pair_index(a, b);
  words_[t >> 6] |= 1ULL << (t & 63);
}

bool PairGraph::has(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (a < 0 || b >= n_ || a == b) throw std::invalid_argument("pair out of range");
  std::uint64_t t = pair_index(a, b);
  return (words_[t >> 6] >> (t & 63)) & 1u;
}

std::size_t PairGraph::edge_count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::array<int, 2>> PairGraph::edges() const {
  std::vector<std::array<int, 2>> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      int bit = std::countr_zero(w);
      out.push_back(pair_unrank((static_cast<std::uint64_t>(wi) << 6) + static_cast<unsigned>(bit)));
      w &= w - 1;
    }
  }
  return out;
}

EdgeClassification classify_edges(const TripleSystem& h, const OrderedPartition& p) {
  if (p.n != h.n()) throw std::invalid_argument("partition size differs from system");
  EdgeClassification out;
  for (std::uint64_t t : h.edge_indices()) {
    auto e = triple_unrank(t);
    VertexMask vm = (1ULL << e[0]) | (1ULL << e[1]) | (1ULL << e[2]);
    if (std::popcount(vm & p.x_mask) == 2)
      out.consistent.push_back(t);
    else
      out.inconsistent.push_back(t);
  }
  out.d_p = out.inconsistent.size();
  return out;
}

VertexMask neighborhood(const TripleSystem& h, int u, int v) {
  if (u == v) throw std::invalid_argument("neighborhood needs distinct vertices");
  if (u > v) std::swap(u, v);
  VertexMask out = 0;
  for (int w = 0; w < h.n(); ++w) {
    if (w == u || w == v) continue;
    int a = u, b = v, c = w;
    if (c < a) std::swap(a, c);
    if (c < b) std::swap(b, c);
    if (a > b) std::swap(a, b);
    if (h.has(a, b, c)) out |= 1ULL << w;
  }
  return out;
}

PairGraph link(const TripleSystem& h, int x, const OrderedPartition& p, LinkSides sides) {
  if (p.n != h.n()) throw std::invalid_argument("partition size differs from system");
  if (x < 0 || x >= h.n()) throw std::invalid_argument("vertex out of range");
  PairGraph out(h.n());
  for (std::uint64_t t : h.edge_indices()) {
    auto e = triple_unrank(t);
    if (e[0] != x && e[1] != x && e[2] != x) continue;
    int u = -1, v = -1;
    for (int k = 0; k < 3; ++k) {
      if (e[k] == x) continue;
      (u < 0 ? u : v) = e[k];
    }
    int in_x = (p.in_x(u) ? 1 : 0) + (p.in_x(v) ? 1 : 0);
    bool want = (sides == LinkSides::XX && in_x == 2) || (sides == LinkSides::XY && in_x == 1) ||
                (sides == LinkSides::YY && in_x == 0);
    if (want) out.add(u, v);
  }
  return out;
}

VertexMask pair_link_restricted(const TripleSystem& h, int x, int y, VertexMask within) {
  if (x == y) throw std::invalid_argument("pair link needs distinct vertices");
  VertexMask nb = neighborhood(h, x, y);
  return nb & within;
}

PairGraph shadow_graph(const TripleSystem& h, const OrderedPartition& p) {
  if (p.n != h.n()) throw std::invalid_argument("partition size differs from system");
  PairGraph out(h.n());
  for (std::uint64_t t : h.edge_indices()) {
    auto e = triple_unrank(t);
    int xs = 0, xv = -1;
    for (int k = 0; k < 3; ++k)
      if (p.in_x(e[k])) { ++xs; xv = e[k]; }
    if (xs != 1) continue;
    for (int k = 0; k < 3; ++k)
      if (e[k] != xv) out.add(xv, e[k]);
  }
  return out;
}

int popcount_mask(VertexMask m) { return std::popcount(m); }

std::vector<int> mask_vertices(VertexMask m, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if ((m >> v) & 1u) out.push_back(v);
  return out;
}

}  // namespace t5census
