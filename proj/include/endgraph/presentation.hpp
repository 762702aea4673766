#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "endgraph/finite_graph.hpp"

namespace endgraph {

// Raised when a presentation oracle is caught contradicting itself
// (asymmetric adjacency, bad levels, broken grading).
class IntegrityError : public std::runtime_error {
  public:
    explicit IntegrityError(const std::string& m) : std::runtime_error(m) {}
};

// A finitely-described countable graph, exposed through oracles.
//
// Contract:
//  * level(root) == 0 and every level set is finite;
//  * adjacency is symmetric;
//  * |level(u) - level(v)| <= 1 along every edge (graded presentation);
//    the K_{k,aleph0} family is the one sanctioned exception and is
//    consumed only by the operations documented to accept it;
//  * neighbor lists are sorted and duplicate-free (simple graphs);
//  * every edge has at least one endpoint of finite degree.
//
// escape_margin is a per-family certified constant: a component of
// G - B_r is infinite iff it contains a vertex of level > r + margin.
// component_horizon is the analogous constant for component identity:
// components of G - B_r computed inside levels (r, r+horizon] are the
// true components.
class Presentation {
  public:
    virtual ~Presentation() = default;

    const std::string& name() const { return name_; }
    const std::string& params_text() const { return params_text_; }

    virtual VertexId root() const = 0;
    virtual bool locally_finite() const { return true; }
    virtual bool rayless() const { return false; }
    virtual int escape_margin() const { return 1; }
    virtual int component_horizon() const { return 1; }
    // Declared minimum vertex degree, when the family certifies one.
    virtual std::optional<int> min_degree() const { return std::nullopt; }

    virtual int level(const VertexId& v) const = 0;
    virtual std::vector<VertexId> level_set(int r) const = 0;

    virtual bool infinite_degree(const VertexId&) const { return false; }
    // Full sorted neighbour list; only valid for finite-degree vertices.
    virtual std::vector<VertexId> neighbors(const VertexId& v) const = 0;
    // Lazy indexed access, also valid for infinite-degree vertices.
    virtual VertexId neighbor_at(const VertexId& v, std::size_t i) const;

    bool adjacent(const VertexId& u, const VertexId& v) const;

  protected:
    Presentation(std::string name, std::string params_text)
        : name_(std::move(name)), params_text_(std::move(params_text)) {}

  private:
    std::string name_;
    std::string params_text_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

// Finite induced subgraph on levels <= radius, with the frontier marked.
struct Ball {
    FiniteGraph graph;
    int radius = 0;
    VertexSet frontier;  // vertices with a neighbour outside the ball
};

// Exact ball extraction; deterministic for fixed (p, r).
// Performs an oracle-symmetry spot check and throws IntegrityError on
// violation.
Ball ball(const Presentation& p, int radius);

// Family-independent integrity probe used by tests and `gallery verify`:
// checks root level, sortedness and symmetry of neighbour lists, level
// grading, and frontier soundness on balls up to max_radius.
void check_presentation_integrity(const Presentation& p, int max_radius);

// Helpers shared by the id schemes of the concrete families.
std::string fmt_signed(int i);  // "-012" / "+007", fixed width, orderable per sign
std::string fmt_nat(int i);     // "007"

}  // namespace endgraph
