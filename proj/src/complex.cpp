#include "largeness/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace largeness {

  namespace {
    std::size_t count_true(std::vector<bool> const& v) {
      return static_cast<std::size_t>(std::count(v.begin(), v.end(), true));
    }

    std::vector<bool> zip(std::vector<bool> const& x,
                          std::vector<bool> const& y,
                          bool                     conj) {
      if (x.size() != y.size()) {
        throw std::invalid_argument("subcomplexes of different complexes");
      }
      std::vector<bool> out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = conj ? (x[i] && y[i]) : (x[i] || y[i]);
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // TwoComplex
  ////////////////////////////////////////////////////////////////////////

  std::size_t TwoComplex::add_vertex(std::string label) {
    _vertex_labels.push_back(std::move(label));
    return _vertex_labels.size() - 1;
  }

  std::size_t TwoComplex::add_edge(std::size_t src,
                                   std::size_t dst,
                                   std::string label) {
    if (src >= num_vertices() || dst >= num_vertices()) {
      throw std::out_of_range("edge endpoint is not a vertex");
    }
    _edges.push_back({src, dst, std::move(label)});
    return _edges.size() - 1;
  }

  std::size_t TwoComplex::add_cell(EdgePath boundary, std::string label) {
    check_path(boundary);
    _cells.push_back({std::move(boundary), std::move(label)});
    return _cells.size() - 1;
  }

  std::size_t TwoComplex::step_source(PathStep s) const {
    auto const& e = _edges.at(s.edge);
    return s.orientation > 0 ? e.src : e.dst;
  }

  std::size_t TwoComplex::step_target(PathStep s) const {
    auto const& e = _edges.at(s.edge);
    return s.orientation > 0 ? e.dst : e.src;
  }

  void TwoComplex::check_path(EdgePath const& path) const {
    if (path.empty()) {
      throw std::invalid_argument("attaching path is empty");
    }
    for (auto const& s : path) {
      if (s.edge >= num_edges()) {
        throw std::invalid_argument("attaching path uses unknown edge "
                                    + std::to_string(s.edge));
      }
      if (s.orientation != 1 && s.orientation != -1) {
        throw std::invalid_argument("orientation must be +1 or -1");
      }
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      auto const& next = path[(i + 1) % path.size()];
      if (step_target(path[i]) != step_source(next)) {
        throw std::invalid_argument("attaching path is not closed at step "
                                    + std::to_string(i));
      }
    }
  }

  void TwoComplex::validate() const {
    for (auto const& e : _edges) {
      if (e.src >= num_vertices() || e.dst >= num_vertices()) {
        throw std::logic_error("edge endpoint is not a vertex");
      }
    }
    for (std::size_t c = 0; c < _cells.size(); ++c) {
      try {
        check_path(_cells[c].boundary);
      } catch (std::invalid_argument const& ex) {
        throw std::logic_error("cell " + std::to_string(c) + ": " + ex.what());
      }
    }
  }

  bool is_closed_path(TwoComplex const& k, EdgePath const& path) {
    if (path.empty()) {
      return false;
    }
    for (auto const& s : path) {
      if (s.edge >= k.num_edges()) {
        return false;
      }
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (k.step_target(path[i]) != k.step_source(path[(i + 1) % path.size()])) {
        return false;
      }
    }
    return true;
  }

  long euler_characteristic(TwoComplex const& k) {
    return static_cast<long>(k.num_vertices()) - static_cast<long>(k.num_edges())
           + static_cast<long>(k.num_cells());
  }

  Components components(TwoComplex const& k) {
    std::vector<std::size_t> parent(k.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (auto const& e : k.edges()) {
      auto a = find(e.src), b = find(e.dst);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
    Components out;
    out.component_of.assign(k.num_vertices(), 0);
    std::vector<std::size_t> index(k.num_vertices(), k.num_vertices());
    for (std::size_t v = 0; v < k.num_vertices(); ++v) {
      auto r = find(v);
      if (index[r] == k.num_vertices()) {
        index[r] = out.count++;
      }
      out.component_of[v] = index[r];
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subdivision
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Provenance identity_provenance(TwoComplex const& k) {
      Provenance p;
      p.edge_image.resize(k.num_edges());
      for (std::size_t e = 0; e < k.num_edges(); ++e) {
        p.edge_image[e] = {{e, 1}};
      }
      p.cell_image.resize(k.num_cells());
      for (std::size_t c = 0; c < k.num_cells(); ++c) {
        p.cell_image[c] = {c};
      }
      return p;
    }
  }  // namespace

  Subdivision subdivide_edge(TwoComplex const& k, std::size_t e) {
    if (e >= k.num_edges()) {
      throw std::out_of_range("no edge " + std::to_string(e));
    }
    Subdivision out{k, identity_provenance(k)};
    auto&       g     = out.complex;
    auto const  old   = k.edge(e);
    auto const  mid   = g.add_vertex(old.label.empty() ? "" : old.label + "/2");
    auto const  second = g.add_edge(mid, old.dst, old.label + "+");
    g.mutable_edge(e).dst   = mid;
    g.mutable_edge(e).label = old.label + "-";
    out.provenance.new_vertices = {mid};
    out.provenance.new_edges    = {second};
    out.provenance.edge_image[e] = {{e, 1}, {second, 1}};

    for (std::size_t c = 0; c < g.num_cells(); ++c) {
      auto const& path = k.cell(c).boundary;
      if (std::none_of(path.begin(), path.end(), [e](PathStep s) {
            return s.edge == e;
          })) {
        continue;
      }
      EdgePath rewritten;
      rewritten.reserve(path.size() + 2);
      for (auto const& s : path) {
        if (s.edge != e) {
          rewritten.push_back(s);
        } else if (s.orientation > 0) {
          rewritten.push_back({e, 1});
          rewritten.push_back({second, 1});
        } else {
          rewritten.push_back({second, -1});
          rewritten.push_back({e, -1});
        }
      }
      g.mutable_cell(c).boundary = std::move(rewritten);
    }
    return out;
  }

  Subdivision subdivide_cell_radially(
      TwoComplex const&               k,
      std::size_t                     c,
      std::vector<std::size_t> const& crossing_positions) {
    if (c >= k.num_cells()) {
      throw std::out_of_range("no cell " + std::to_string(c));
    }
    if (crossing_positions.empty()) {
      throw std::invalid_argument(
          "radial subdivision needs at least one crossing position");
    }
    auto positions = crossing_positions;
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()),
                    positions.end());
    auto const path = k.cell(c).boundary;
    if (positions.back() >= path.size()) {
      throw std::out_of_range("crossing position beyond attaching path");
    }

    Subdivision out{k, identity_provenance(k)};
    auto&       g      = out.complex;
    auto const  label  = k.cell(c).label;
    auto const  centre = g.add_vertex(label.empty() ? "" : label + "/c");
    out.provenance.new_vertices = {centre};

    std::vector<std::size_t> radial;
    radial.reserve(positions.size());
    for (std::size_t j = 0; j < positions.size(); ++j) {
      auto target = g.step_source(path[positions[j]]);
      radial.push_back(
          g.add_edge(centre, target, label + "/r" + std::to_string(j)));
    }
    out.provenance.new_edges = radial;

    auto const k_sectors = positions.size();
    std::vector<std::size_t> sectors;
    for (std::size_t j = 0; j < k_sectors; ++j) {
      auto     begin = positions[j];
      auto     end   = j + 1 < k_sectors ? positions[j + 1]
                                         : positions[0] + path.size();
      EdgePath sector;
      sector.reserve(end - begin + 2);
      sector.push_back({radial[j], 1});
      for (auto i = begin; i < end; ++i) {
        sector.push_back(path[i % path.size()]);
      }
      sector.push_back({radial[(j + 1) % k_sectors], -1});
      auto sector_label = label + "/s" + std::to_string(j);
      if (j == 0) {
        g.mutable_cell(c) = {std::move(sector), std::move(sector_label)};
        sectors.push_back(c);
      } else {
        sectors.push_back(g.add_cell(std::move(sector), std::move(sector_label)));
      }
    }
    out.provenance.cell_image[c] = std::move(sectors);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcomplex
  ////////////////////////////////////////////////////////////////////////

  Subcomplex Subcomplex::none(TwoComplex const& k) {
    return {std::vector<bool>(k.num_vertices(), false),
            std::vector<bool>(k.num_edges(), false),
            std::vector<bool>(k.num_cells(), false)};
  }

  Subcomplex Subcomplex::all(TwoComplex const& k) {
    return {std::vector<bool>(k.num_vertices(), true),
            std::vector<bool>(k.num_edges(), true),
            std::vector<bool>(k.num_cells(), true)};
  }

  Subcomplex Subcomplex::one_skeleton(TwoComplex const& k) {
    auto s  = all(k);
    s.cells = std::vector<bool>(k.num_cells(), false);
    return s;
  }

  bool Subcomplex::is_closed_in(TwoComplex const& k) const {
    if (vertices.size() != k.num_vertices() || edges.size() != k.num_edges()
        || cells.size() != k.num_cells()) {
      return false;
    }
    for (std::size_t e = 0; e < k.num_edges(); ++e) {
      if (edges[e] && !(vertices[k.edge(e).src] && vertices[k.edge(e).dst])) {
        return false;
      }
    }
    for (std::size_t c = 0; c < k.num_cells(); ++c) {
      if (!cells[c]) {
        continue;
      }
      for (auto const& s : k.cell(c).boundary) {
        if (!edges[s.edge]) {
          return false;
        }
      }
    }
    return true;
  }

  void Subcomplex::close_in(TwoComplex const& k) {
    for (std::size_t c = 0; c < k.num_cells(); ++c) {
      if (cells[c]) {
        for (auto const& s : k.cell(c).boundary) {
          edges[s.edge] = true;
        }
      }
    }
    for (std::size_t e = 0; e < k.num_edges(); ++e) {
      if (edges[e]) {
        vertices[k.edge(e).src] = true;
        vertices[k.edge(e).dst] = true;
      }
    }
  }

  std::size_t Subcomplex::num_vertices() const {
    return count_true(vertices);
  }
  std::size_t Subcomplex::num_edges() const {
    return count_true(edges);
  }
  std::size_t Subcomplex::num_cells() const {
    return count_true(cells);
  }

  Subcomplex unite(Subcomplex const& x, Subcomplex const& y) {
    return {zip(x.vertices, y.vertices, false),
            zip(x.edges, y.edges, false),
            zip(x.cells, y.cells, false)};
  }

  Subcomplex intersect(Subcomplex const& x, Subcomplex const& y) {
    return {zip(x.vertices, y.vertices, true),
            zip(x.edges, y.edges, true),
            zip(x.cells, y.cells, true)};
  }

  bool is_subset(Subcomplex const& x, Subcomplex const& y) {
    return intersect(x, y) == x;
  }

  Extraction subcomplex(TwoComplex const& k, Subcomplex const& selection) {
    if (!selection.is_closed_in(k)) {
      throw std::invalid_argument("selection is not a closed subcomplex");
    }
    Extraction               out;
    std::vector<std::size_t> vnew(k.num_vertices()), enew(k.num_edges());
    for (std::size_t v = 0; v < k.num_vertices(); ++v) {
      if (selection.vertices[v]) {
        vnew[v] = out.complex.add_vertex(k.vertex_label(v));
        out.vertex_map.push_back(v);
      }
    }
    for (std::size_t e = 0; e < k.num_edges(); ++e) {
      if (selection.edges[e]) {
        auto const& edge = k.edge(e);
        enew[e] = out.complex.add_edge(vnew[edge.src], vnew[edge.dst], edge.label);
        out.edge_map.push_back(e);
      }
    }
    for (std::size_t c = 0; c < k.num_cells(); ++c) {
      if (selection.cells[c]) {
        EdgePath path = k.cell(c).boundary;
        for (auto& s : path) {
          s.edge = enew[s.edge];
        }
        out.complex.add_cell(std::move(path), k.cell(c).label);
        out.cell_map.push_back(c);
      }
    }
    return out;
  }

  Subcomplex pullback(Subcomplex const& inner, Extraction const& outer) {
    auto out     = Subcomplex::none(outer.complex);
    auto convert = [](std::vector<bool> const&        sel,
                      std::vector<std::size_t> const& map,
                      std::vector<bool>&              dst) {
      std::size_t hits = 0;
      for (std::size_t i = 0; i < map.size(); ++i) {
        if (sel.at(map[i])) {
          dst[i] = true;
          ++hits;
        }
      }
      if (hits != count_true(sel)) {
        throw std::invalid_argument(
            "inner selection is not contained in the extracted subcomplex");
      }
    };
    convert(inner.vertices, outer.vertex_map, out.vertices);
    convert(inner.edges, outer.edge_map, out.edges);
    convert(inner.cells, outer.cell_map, out.cells);
    return out;
  }

  Subcomplex push_forward(Subcomplex const&  selection,
                          TwoComplex const&  old_complex,
                          Subdivision const& sub) {
    auto out = Subcomplex::none(sub.complex);
    for (std::size_t v = 0; v < old_complex.num_vertices(); ++v) {
      out.vertices[v] = selection.vertices.at(v);
    }
    for (std::size_t e = 0; e < old_complex.num_edges(); ++e) {
      if (selection.edges.at(e)) {
        for (auto const& s : sub.provenance.edge_image[e]) {
          out.edges[s.edge] = true;
        }
      }
    }
    for (std::size_t c = 0; c < old_complex.num_cells(); ++c) {
      if (selection.cells.at(c)) {
        for (auto n : sub.provenance.cell_image[c]) {
          out.cells[n] = true;
        }
      }
    }
    out.close_in(sub.complex);
    return out;
  }

  std::string dump(TwoComplex const& k) {
    std::ostringstream os;
    for (std::size_t v = 0; v < k.num_vertices(); ++v) {
      os << "V " << v << '\n';
    }
    for (std::size_t e = 0; e < k.num_edges(); ++e) {
      auto const& edge = k.edge(e);
      os << "E " << e << ' ' << edge.src << ' ' << edge.dst << ' '
         << (edge.label.empty() ? "-" : edge.label) << '\n';
    }
    for (std::size_t c = 0; c < k.num_cells(); ++c) {
      auto const& cell = k.cell(c);
      os << "C " << c;
      for (auto const& s : cell.boundary) {
        os << " (" << s.edge << ',' << (s.orientation > 0 ? "+1" : "-1") << ')';
      }
      os << ' ' << (cell.label.empty() ? "-" : cell.label) << '\n';
    }
    return os.str();
  }

}  // namespace largeness
