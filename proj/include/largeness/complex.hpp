#ifndef LARGENESS_COMPLEX_HPP_
#define LARGENESS_COMPLEX_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace largeness {

  // One step of an edge-path: traverse `edge` src->dst (+1) or dst->src (-1).
  struct PathStep {
    std::size_t edge        = 0;
    int         orientation = 1;

    PathStep reversed() const noexcept {
      return {edge, -orientation};
    }
    bool operator==(PathStep const&) const = default;
  };

  using EdgePath = std::vector<PathStep>;

  struct Edge {
    std::size_t src = 0;
    std::size_t dst = 0;
    std::string label;
  };

  struct Cell {
    EdgePath    boundary;
    std::string label;
  };

  // A combinatorial 2-complex: a graph with 2-cells attached along closed
  // edge-paths. Ids are dense indices in insertion order.
  class TwoComplex {
   public:
    std::size_t add_vertex(std::string label = {});
    // Throws std::out_of_range on unknown endpoints.
    std::size_t add_edge(std::size_t src, std::size_t dst, std::string label = {});
    // Throws std::invalid_argument unless `boundary` is a nonempty closed
    // edge-path over existing edges.
    std::size_t add_cell(EdgePath boundary, std::string label = {});

    std::size_t num_vertices() const noexcept {
      return _vertex_labels.size();
    }
    std::size_t num_edges() const noexcept {
      return _edges.size();
    }
    std::size_t num_cells() const noexcept {
      return _cells.size();
    }

    std::string const& vertex_label(std::size_t v) const {
      return _vertex_labels.at(v);
    }
    Edge const& edge(std::size_t e) const {
      return _edges.at(e);
    }
    Cell const& cell(std::size_t c) const {
      return _cells.at(c);
    }
    std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }
    std::vector<Cell> const& cells() const noexcept {
      return _cells;
    }

    std::size_t step_source(PathStep s) const;
    std::size_t step_target(PathStep s) const;

    // Used by the subdivision operations, which rewrite in place on a copy.
    Edge& mutable_edge(std::size_t e) {
      return _edges.at(e);
    }
    Cell& mutable_cell(std::size_t c) {
      return _cells.at(c);
    }

    // Re-checks every structural invariant; throws std::logic_error.
    void validate() const;

   private:
    void check_path(EdgePath const& path) const;

    std::vector<std::string> _vertex_labels;
    std::vector<Edge>        _edges;
    std::vector<Cell>        _cells;
  };

  // True if `path` is nonempty, uses existing edges, and is closed.
  bool is_closed_path(TwoComplex const& k, EdgePath const& path);

  long euler_characteristic(TwoComplex const& k);

  struct Components {
    std::size_t              count = 0;
    std::vector<std::size_t> component_of;  // per vertex
  };

  // Components of the 1-skeleton.
  Components components(TwoComplex const& k);

  // Records where each entity of the old complex went. Vertex ids are
  // preserved; new entities are appended.
  struct Provenance {
    std::vector<EdgePath>                 edge_image;  // per old edge
    std::vector<std::vector<std::size_t>> cell_image;  // per old cell
    std::vector<std::size_t>              new_vertices;
    std::vector<std::size_t>              new_edges;
  };

  struct Subdivision {
    TwoComplex complex;
    Provenance provenance;
  };

  // Splits edge e at a fresh midpoint m: e keeps id and becomes src->m, and a
  // new edge m->dst is appended. Attaching paths are rewritten.
  Subdivision subdivide_edge(TwoComplex const& k, std::size_t e);

  // Cones cell c from a fresh centre vertex. `crossing_positions` index the
  // attaching path: position i names the vertex where step i starts. One
  // radial edge (centre -> that vertex) is added per position, and the cell
  // is replaced by one sector per consecutive pair of positions (cyclically).
  // Sector j keeps the order of positions; sector 0 reuses id c.
  Subdivision subdivide_cell_radially(TwoComplex const&               k,
                                      std::size_t                     c,
                                      std::vector<std::size_t> const& crossing_positions);

  // Selection of vertices, edges and cells of a parent complex.
  struct Subcomplex {
    std::vector<bool> vertices;
    std::vector<bool> edges;
    std::vector<bool> cells;

    static Subcomplex none(TwoComplex const& k);
    static Subcomplex all(TwoComplex const& k);
    static Subcomplex one_skeleton(TwoComplex const& k);

    // Edges' endpoints and cells' boundary edges are selected.
    bool is_closed_in(TwoComplex const& k) const;
    // Adds every face of a selected edge or cell.
    void close_in(TwoComplex const& k);

    std::size_t num_vertices() const;
    std::size_t num_edges() const;
    std::size_t num_cells() const;

    bool operator==(Subcomplex const&) const = default;
  };

  Subcomplex unite(Subcomplex const& x, Subcomplex const& y);
  Subcomplex intersect(Subcomplex const& x, Subcomplex const& y);
  bool       is_subset(Subcomplex const& x, Subcomplex const& y);

  // Standalone copy of a closed selection with inclusion maps (new id ->
  // parent id).
  struct Extraction {
    TwoComplex               complex;
    std::vector<std::size_t> vertex_map;
    std::vector<std::size_t> edge_map;
    std::vector<std::size_t> cell_map;
  };

  // Throws std::invalid_argument if the selection is not closed.
  Extraction subcomplex(TwoComplex const& k, Subcomplex const& selection);

  // Re-expresses `inner` (a selection of the parent) as a selection of
  // `outer.complex`. Throws if inner is not contained in the extracted part.
  Subcomplex pullback(Subcomplex const& inner, Extraction const& outer);

  // Image of a selection of the old complex in a subdivision. Fresh
  // vertices/edges are selected when they lie inside a selected edge/cell.
  Subcomplex push_forward(Subcomplex const& selection,
                          TwoComplex const& old_complex,
                          Subdivision const& sub);

  // One line per entity: `V id`, `E id src dst label`, `C id (edge,+1)... label`.
  std::string dump(TwoComplex const& k);

}  // namespace largeness

#endif  // LARGENESS_COMPLEX_HPP_
