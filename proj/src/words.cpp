#include "qcm/words.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcm/errors.hpp"

namespace qcm {

namespace {

bool matches_alternating(const Word& w, int pos, int a, int b, int len) {
  if (pos < 0 || pos + len > static_cast<int>(w.size())) return false;
  for (int t = 0; t < len; ++t)
    if (w[pos + t] != ((t % 2 == 0) ? a : b)) return false;
  return true;
}

}  // namespace

std::vector<CoxeterMove> available_moves(const CartanDatum& datum, const Word& word) {
  std::vector<CoxeterMove> moves;
  const int n = static_cast<int>(word.size());
  for (int pos = 0; pos < n - 1; ++pos) {
    const int a = word[pos], b = word[pos + 1];
    if (a == b) continue;
    const int m = datum.m(a, b);
    const int len = (m == 3) ? 3 : m;
    if (matches_alternating(word, pos, a, b, len))
      moves.push_back({pos, a, b, m});
  }
  return moves;
}

Word apply_move(const CartanDatum& datum, const Word& word, const CoxeterMove& move) {
  const int len = move.length();
  if (datum.m(move.a, move.b) != move.kind ||
      !matches_alternating(word, move.pos, move.a, move.b, len))
    throw InvalidMove("pattern does not match at position " + std::to_string(move.pos + 1));
  Word out = word;
  for (int t = 0; t < len; ++t)
    out[move.pos + t] = (t % 2 == 0) ? move.b : move.a;
  return out;
}

WordGraph build_word_graph(const CartanPtr& datum, const Word& seed, size_t max_vertices) {
  if (!is_reduced(*datum, seed)) throw Error("build_word_graph: seed word is not reduced");
  WordGraph g;
  g.datum = datum;
  g.vertices.push_back(seed);
  g.index[seed] = 0;
  g.edges.emplace_back();
  std::deque<int> todo{0};
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop_front();
    const Word w = g.vertices[v];
    for (const CoxeterMove& m : available_moves(*datum, w)) {
      const Word u = apply_move(*datum, w, m);
      auto it = g.index.find(u);
      int ui;
      if (it == g.index.end()) {
        if (g.vertices.size() >= max_vertices)
          throw SizeLimit("word graph exceeds " + std::to_string(max_vertices) + " vertices");
        ui = static_cast<int>(g.vertices.size());
        g.vertices.push_back(u);
        g.index[u] = ui;
        g.edges.emplace_back();
        todo.push_back(ui);
      } else {
        ui = it->second;
      }
      g.edges[v].push_back({m, ui});
    }
  }
  return g;
}

int WordGraph::edge_count() const {
  int twice = 0;
  for (const auto& e : edges) twice += static_cast<int>(e.size());
  return twice / 2;
}

std::string WordGraph::to_dot() const {
  std::ostringstream os;
  os << "graph words {\n";
  for (size_t v = 0; v < vertices.size(); ++v)
    os << "  v" << v << " [label=\"" << word_str(vertices[v]) << "\"];\n";
  for (size_t v = 0; v < vertices.size(); ++v)
    for (const auto& [m, u] : edges[v])
      if (static_cast<int>(v) < u) {
        os << "  v" << v << " -- v" << u;
        if (m.kind == 2) os << " [style=dashed]";
        if (m.kind >= 4) os << " [penwidth=2]";
        os << ";\n";
      }
  os << "}\n";
  return os.str();
}

std::string WordGraph::to_json() const {
  std::ostringstream os;
  os << "{\"type\":\"" << datum->label() << "\",\"vertices\":[";
  for (size_t v = 0; v < vertices.size(); ++v)
    os << (v ? "," : "") << "\"" << word_str(vertices[v]) << "\"";
  os << "],\"edges\":[";
  bool first = true;
  for (size_t v = 0; v < vertices.size(); ++v)
    for (const auto& [m, u] : edges[v])
      if (static_cast<int>(v) < u) {
        os << (first ? "" : ",") << "{\"from\":" << v << ",\"to\":" << u
           << ",\"pos\":" << m.pos + 1 << ",\"pair\":[" << m.a << "," << m.b
           << "],\"kind\":" << m.kind << "}";
        first = false;
      }
  os << "]}";
  return os.str();
}

QuotientGraph quotient(const WordGraph& graph) {
  const int n = static_cast<int>(graph.vertices.size());
  QuotientGraph q;
  q.datum = graph.datum;
  q.class_of.assign(n, -1);

  // Commutation classes: components under kind-2 edges.
  for (int v = 0; v < n; ++v) {
    if (q.class_of[v] != -1) continue;
    const int c = static_cast<int>(q.classes.size());
    q.classes.emplace_back();
    std::deque<int> todo{v};
    q.class_of[v] = c;
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      q.classes[c].push_back(x);
      for (const auto& [m, u] : graph.edges[x])
        if (m.kind == 2 && q.class_of[u] == -1) {
          q.class_of[u] = c;
          todo.push_back(u);
        }
    }
    std::sort(q.classes[c].begin(), q.classes[c].end());
  }

  // Identify non-commutative edges related by commuting squares: sliding a
  // disjoint commutative move across an edge keeps the same quotient edge.
  std::map<std::pair<int, CoxeterMove>, int> edge_id;
  std::vector<std::pair<int, CoxeterMove>> edge_of;
  for (int v = 0; v < n; ++v)
    for (const auto& [m, u] : graph.edges[v])
      if (m.kind > 2 && !edge_id.count({v, m})) {
        edge_id[{v, m}] = static_cast<int>(edge_of.size());
        edge_of.push_back({v, m});
      }
  std::vector<int> parent(edge_of.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

  for (const auto& [key, id] : edge_id) {
    const auto& [v, m] = key;
    const Word& w = graph.vertices[v];
    for (const CoxeterMove& c : available_moves(*graph.datum, w)) {
      if (c.kind != 2) continue;
      const bool disjoint = c.pos + 2 <= m.pos || m.pos + m.length() <= c.pos;
      if (!disjoint) continue;
      const Word w2 = apply_move(*graph.datum, w, c);
      auto it = edge_id.find({graph.index.at(w2), m});
      if (it != edge_id.end()) unite(id, it->second);
    }
    // Same edge traversed backwards.
    const Word w2 = apply_move(*graph.datum, w, m);
    auto it = edge_id.find({graph.index.at(w2), m.reversed()});
    if (it != edge_id.end()) unite(id, it->second);
  }

  // One edge per orbit; both orientations were united above, and parallel
  // edges between the same classes survive when their orbits differ (the
  // two braid edges of A2xA1).
  std::map<int, int> root_to_edge;
  for (size_t e = 0; e < edge_of.size(); ++e) {
    const int r = find(static_cast<int>(e));
    if (root_to_edge.count(r)) continue;
    root_to_edge[r] = static_cast<int>(q.edge_list.size());
    const auto& [v, m] = edge_of[e];
    const Word w2 = apply_move(*graph.datum, graph.vertices[v], m);
    q.edge_list.push_back({q.class_of[v], q.class_of[graph.index.at(w2)], m.kind, v, m});
  }
  return q;
}

bool QuotientGraph::is_cycle() const {
  const int n = static_cast<int>(classes.size());
  if (static_cast<int>(edge_list.size()) != n) return false;
  std::vector<int> degree(n, 0);
  for (const auto& e : edge_list) {
    ++degree[e.from];
    ++degree[e.to];
  }
  for (int d : degree)
    if (d != 2) return false;
  // Connectivity.
  std::vector<char> seen(n, 0);
  std::deque<int> todo{0};
  seen[0] = 1;
  int count = 1;
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop_front();
    for (const auto& e : edge_list) {
      int other = -1;
      if (e.from == v) other = e.to;
      if (e.to == v) other = e.from;
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        ++count;
        todo.push_back(other);
      }
    }
  }
  return count == n;
}

std::string QuotientGraph::to_dot(const WordGraph& g) const {
  std::ostringstream os;
  os << "graph quotient {\n";
  for (size_t c = 0; c < classes.size(); ++c)
    os << "  c" << c << " [label=\""
       << stack_notation(*datum, g.vertices[classes[c].front()]) << "\"];\n";
  for (const auto& e : edge_list) {
    os << "  c" << e.from << " -- c" << e.to;
    if (e.kind >= 4) os << " [penwidth=2]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string QuotientGraph::to_json(const WordGraph& g) const {
  std::ostringstream os;
  os << "{\"type\":\"" << datum->label() << "\",\"classes\":[";
  for (size_t c = 0; c < classes.size(); ++c) {
    os << (c ? "," : "") << "{\"stack\":\""
       << stack_notation(*datum, g.vertices[classes[c].front()]) << "\",\"words\":[";
    for (size_t k = 0; k < classes[c].size(); ++k)
      os << (k ? "," : "") << "\"" << word_str(g.vertices[classes[c][k]]) << "\"";
    os << "]}";
  }
  os << "],\"edges\":[";
  for (size_t e = 0; e < edge_list.size(); ++e)
    os << (e ? "," : "") << "{\"from\":" << edge_list[e].from
       << ",\"to\":" << edge_list[e].to << ",\"kind\":" << edge_list[e].kind << "}";
  os << "]}";
  return os.str();
}

std::string stack_notation(const CartanDatum& datum, const Word& rep) {
  // Column of each letter: one past the latest column holding a letter it
  // does not commute with. Independent of the representative.
  std::vector<int> column(rep.size(), 0);
  int ncol = 0;
  for (size_t k = 0; k < rep.size(); ++k) {
    int col = 0;
    for (size_t t = 0; t < k; ++t)
      if (rep[t] == rep[k] || datum.a(rep[t], rep[k]) != 0)
        col = std::max(col, column[t] + 1);
    column[k] = col;
    ncol = std::max(ncol, col + 1);
  }
  std::vector<std::vector<int>> cols(ncol);
  for (size_t k = 0; k < rep.size(); ++k) cols[column[k]].push_back(rep[k]);
  std::string out;
  for (auto& c : cols) {
    std::sort(c.begin(), c.end());
    if (c.size() == 1) {
      out += std::to_string(c[0]);
    } else {
      out += "(";
      for (int l : c) out += std::to_string(l);
      out += ")";
    }
  }
  return out;
}

int last_letter(const Word& word) {
  if (word.empty()) throw Error("last_letter: empty word");
  return word.back();
}

int m_count(const std::vector<Word>& path, int i) {
  int n = 0;
  for (const auto& w : path)
    if (!w.empty() && w.back() == i) ++n;
  return n;
}

std::vector<Word> enumerate_words_brute_force(const CartanDatum& datum, const Word& word) {
  const int n = static_cast<int>(word.size());
  const int r = datum.rank();
  long long total = 1;
  for (int k = 0; k < n; ++k) {
    total *= r;
    if (total > (1LL << 26)) throw SizeLimit("brute force out of range");
  }
  const std::vector<Root> target = root_images(datum, word);

  std::vector<std::vector<Word>> found;
#ifdef _OPENMP
  found.resize(omp_get_max_threads());
#else
  found.resize(1);
#endif
#pragma omp parallel for schedule(static)
  for (long long code = 0; code < total; ++code) {
    Word w(n);
    long long c = code;
    for (int k = 0; k < n; ++k) {
      w[k] = static_cast<int>(c % r) + 1;
      c /= r;
    }
    if (!is_reduced(datum, w)) continue;
    if (root_images(datum, w) != target) continue;
#ifdef _OPENMP
    found[omp_get_thread_num()].push_back(std::move(w));
#else
    found[0].push_back(std::move(w));
#endif
  }
  std::vector<Word> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace qcm
