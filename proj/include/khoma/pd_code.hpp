#pragma once

// PD-code representation of link diagrams.
//
// A crossing is a quadruple of arc labels listed counterclockwise starting
// at the incoming under-strand.  Text grammar (whitespace separated):
//
//   pd      := header? token+
//   header  := "unbounded_face:" INT
//   token   := "X(" INT "," INT "," INT "," INT ")" | "O(" INT ")"
//
// '#' starts a comment that runs to end of line.  Crossings are numbered
// 1..n in textual order.  O(a) is a crossingless circle with label a.

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace khoma {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A dart is one of the four arc-ends at a crossing: (crossing index, slot).
// Crossing indices and slots are 0-based internally.
struct Dart {
  int crossing = -1;
  int slot = -1;
  bool operator==(const Dart& o) const { return crossing == o.crossing && slot == o.slot; }
  bool operator<(const Dart& o) const {
    return crossing != o.crossing ? crossing < o.crossing : slot < o.slot;
  }
};

class PlanarDiagram {
 public:
  PlanarDiagram() = default;

  PlanarDiagram(std::vector<std::array<int, 4>> crossings, std::vector<int> free_circles = {},
                std::optional<int> marked_face = std::nullopt)
      : crossings_(std::move(crossings)),
        free_circles_(std::move(free_circles)),
        marked_face_(marked_face) {
    index_arcs();
    validate();
  }

  static PlanarDiagram parse(const std::string& text);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  const std::vector<std::array<int, 4>>& crossings() const { return crossings_; }
  const std::array<int, 4>& quad(int c) const { return crossings_[c]; }
  const std::vector<int>& free_circles() const { return free_circles_; }

  // Sorted list of arc labels appearing in crossings (free circles excluded).
  const std::vector<int>& arcs() const { return arcs_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  // Dense index of an arc label, 0..arc_count()-1.
  int arc_index(int label) const { return arc_index_.at(label); }

  bool has_arc(int label) const { return arc_index_.count(label) > 0; }

  // The two darts where an arc label occurs.  For an arc with both ends at
  // the same crossing the two slots are distinct.
  const std::array<Dart, 2>& arc_ends(int label) const { return arc_ends_.at(label); }

  std::optional<int> marked_face() const { return marked_face_; }
  void set_marked_face(std::optional<int> f) { marked_face_ = f; }

  // Faces of the underlying 4-valent plane graph, one per orbit of the
  // left-turning boundary walk.  face_of_corner[c][k] is the face index of
  // the corner between slots k and k+1 (mod 4) at crossing c.  Faces are
  // numbered in order of discovery scanning corners (c, k) lexicographically,
  // so face 0 is the one incident to the first corner of crossing 0.
  struct Faces {
    int count = 0;
    std::vector<std::array<int, 4>> face_of_corner;
  };
  const Faces& faces() const { return faces_; }

  // Number of connected components of the diagram (crossing graph components
  // plus free circles).
  int diagram_components() const;

  // Serialize back to PD text.
  std::string str() const;

  bool operator==(const PlanarDiagram& o) const {
    return crossings_ == o.crossings_ && free_circles_ == o.free_circles_;
  }

 private:
  void index_arcs();
  void validate();
  void trace_faces();

  std::vector<std::array<int, 4>> crossings_;
  std::vector<int> free_circles_;
  std::optional<int> marked_face_;

  std::vector<int> arcs_;
  std::map<int, int> arc_index_;
  std::map<int, std::array<Dart, 2>> arc_ends_;
  Faces faces_;
};

inline void PlanarDiagram::index_arcs() {
  std::map<int, std::vector<Dart>> ends;
  for (int c = 0; c < crossing_count(); ++c)
    for (int k = 0; k < 4; ++k) {
      int a = crossings_[c][k];
      if (a <= 0) throw ParseError("arc labels must be positive integers");
      ends[a].push_back({c, k});
    }
  arcs_.clear();
  arc_index_.clear();
  arc_ends_.clear();
  for (auto& [label, ds] : ends) {
    if (ds.size() != 2) {
      std::ostringstream msg;
      msg << "arc " << label << " used " << ds.size() << " times, expected 2";
      throw ParseError(msg.str());
    }
    arc_index_[label] = static_cast<int>(arcs_.size());
    arcs_.push_back(label);
    arc_ends_[label] = {ds[0], ds[1]};
  }
  for (int a : free_circles_)
    if (arc_index_.count(a)) throw ParseError("free circle label reused by a crossing arc");
}

inline void PlanarDiagram::trace_faces() {
  faces_.face_of_corner.assign(crossing_count(), {-1, -1, -1, -1});
  faces_.count = 0;
  // Walk: enter crossing c at slot k, claim corner (c,k), leave through slot
  // k+1, follow that arc to its far end, repeat.  Orbits are the faces.
  auto other_end = [&](int c, int k) -> Dart {
    const auto& e = arc_ends_.at(crossings_[c][k]);
    Dart here{c, k};
    return e[0] == here ? e[1] : e[0];
  };
  for (int c0 = 0; c0 < crossing_count(); ++c0)
    for (int k0 = 0; k0 < 4; ++k0) {
      if (faces_.face_of_corner[c0][k0] != -1) continue;
      int f = faces_.count++;
      int c = c0, k = k0;
      while (faces_.face_of_corner[c][k] == -1) {
        faces_.face_of_corner[c][k] = f;
        Dart next = other_end(c, (k + 1) % 4);
        c = next.crossing;
        k = next.slot;
      }
    }
}

inline int PlanarDiagram::diagram_components() const {
  if (crossing_count() == 0) return static_cast<int>(free_circles_.size());
  std::vector<int> parent(arc_count());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& q : crossings_) {
    int r = find(arc_index_.at(q[0]));
    for (int k = 1; k < 4; ++k) parent[find(arc_index_.at(q[k]))] = r;
  }
  std::set<int> roots;
  for (int i = 0; i < arc_count(); ++i) roots.insert(find(i));
  return static_cast<int>(roots.size()) + static_cast<int>(free_circles_.size());
}

inline void PlanarDiagram::validate() {
  trace_faces();
  if (crossing_count() == 0) return;
  // Euler check V - E + F = 2, applied per connected component: the face
  // walk of a component is independent of the others, and a combinatorial
  // rotation system carries no information about how components nest.
  std::vector<int> comp(crossing_count(), -1);
  int ncomp = 0;
  for (int c0 = 0; c0 < crossing_count(); ++c0) {
    if (comp[c0] != -1) continue;
    int id = ncomp++;
    std::vector<int> stack{c0};
    comp[c0] = id;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int k = 0; k < 4; ++k) {
        const auto& e = arc_ends_.at(crossings_[c][k]);
        for (const Dart& d : e)
          if (comp[d.crossing] == -1) {
            comp[d.crossing] = id;
            stack.push_back(d.crossing);
          }
      }
    }
  }
  std::vector<int> verts(ncomp, 0), edges(ncomp, 0), fcs(ncomp, 0);
  for (int c = 0; c < crossing_count(); ++c) verts[comp[c]]++;
  for (int a : arcs_) edges[comp[arc_ends_.at(a)[0].crossing]]++;
  std::vector<int> face_comp(faces_.count, -1);
  for (int c = 0; c < crossing_count(); ++c)
    for (int k = 0; k < 4; ++k) face_comp[faces_.face_of_corner[c][k]] = comp[c];
  for (int f = 0; f < faces_.count; ++f) fcs[face_comp[f]]++;
  for (int i = 0; i < ncomp; ++i)
    if (verts[i] - edges[i] + fcs[i] != 2) {
      std::ostringstream msg;
      msg << "rotation system is not planar: V-E+F = " << verts[i] - edges[i] + fcs[i]
          << " != 2 on component " << i;
      throw ParseError(msg.str());
    }
  if (marked_face_ && (*marked_face_ < 0 || *marked_face_ >= faces_.count))
    throw ParseError("unbounded_face index out of range");
}

inline PlanarDiagram PlanarDiagram::parse(const std::string& text) {
  // strip comments
  std::string clean;
  clean.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i < text.size()) clean.push_back('\n');
    } else {
      clean.push_back(text[i]);
    }
  }

  std::vector<std::array<int, 4>> crossings;
  std::vector<int> free_circles;
  std::optional<int> marked;

  std::istringstream in(clean);
  std::string tok;
  auto parse_ints = [](const std::string& body, const std::string& where) {
    std::vector<int> vals;
    std::string cur;
    for (char ch : body + ",") {
      if (ch == ',') {
        if (cur.empty()) throw ParseError("malformed token: " + where);
        try {
          size_t pos = 0;
          int v = std::stoi(cur, &pos);
          if (pos != cur.size()) throw std::invalid_argument("");
          vals.push_back(v);
        } catch (const std::exception&) {
          throw ParseError("malformed token: " + where);
        }
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur.push_back(ch);
      }
    }
    return vals;
  };

  while (in >> tok) {
    if (tok.rfind("unbounded_face:", 0) == 0) {
      std::string rest = tok.substr(std::string("unbounded_face:").size());
      if (rest.empty()) {
        if (!(in >> rest)) throw ParseError("unbounded_face: missing index");
      }
      try {
        marked = std::stoi(rest);
      } catch (const std::exception&) {
        throw ParseError("unbounded_face: malformed index");
      }
      continue;
    }
    char kind = tok[0];
    if ((kind != 'X' && kind != 'O') || tok.size() < 3 || tok[1] != '(' || tok.back() != ')')
      throw ParseError("malformed token: " + tok);
    auto vals = parse_ints(tok.substr(2, tok.size() - 3), tok);
    if (kind == 'X') {
      if (vals.size() != 4) throw ParseError("malformed token: " + tok);
      crossings.push_back({vals[0], vals[1], vals[2], vals[3]});
    } else {
      if (vals.size() != 1) throw ParseError("malformed token: " + tok);
      free_circles.push_back(vals[0]);
    }
  }
  if (crossings.empty() && free_circles.empty()) throw ParseError("empty PD code");
  return PlanarDiagram(std::move(crossings), std::move(free_circles), marked);
}

inline std::string PlanarDiagram::str() const {
  std::ostringstream out;
  if (marked_face_) out << "unbounded_face: " << *marked_face_ << "\n";
  bool first = true;
  for (const auto& q : crossings_) {
    if (!first) out << " ";
    out << "X(" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << ")";
    first = false;
  }
  for (int a : free_circles_) {
    if (!first) out << " ";
    out << "O(" << a << ")";
    first = false;
  }
  return out.str();
}

}  // namespace khoma
