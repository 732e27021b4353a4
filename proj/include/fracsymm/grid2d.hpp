#pragma once

#include <memory>
#include <string>
#include <vector>

namespace fracsymm {

enum class ShapeKind { disk, square, ellipse };

// Disk(R), square(L) or ellipse(a,b), centered at the origin.
struct Shape {
    ShapeKind kind;
    double a = 0, b = 0;

    static Shape disk(double R) { return {ShapeKind::disk, R, R}; }
    static Shape square(double L) { return {ShapeKind::square, L, L}; }
    static Shape ellipse(double ax, double bx) { return {ShapeKind::ellipse, ax, bx}; }

    double half_width() const { return kind == ShapeKind::square ? a / 2 : a; }
    double half_height() const { return kind == ShapeKind::square ? a / 2 : b; }
    bool inside(double x, double y) const;
    double analytic_area() const;
    // circumradius about the origin
    double outer_radius() const;
    // distance from interior point p along unit direction d to the boundary
    double ray_to_boundary(double px, double py, double dx, double dy) const;
    // distance from p to the boundary (exact for disk/square, lower-bound
    // style approximation for the ellipse)
    double boundary_distance(double px, double py) const;
    std::string describe() const;
};

// Cell decomposition: lattice of spacing h over the bounding box, keeping
// cells whose centers lie strictly inside the shape. Every cell has area
// h^2; ordering is row-major and deterministic.
struct PlanarDomain {
    Shape shape;
    double h = 0;
    int nx = 0, ny = 0;          // lattice dimensions
    double x0 = 0, y0 = 0;       // lattice origin (center of cell (0,0))
    std::vector<double> cx, cy;  // cell centers
    std::vector<int> cell_of_node;  // lattice index -> cell index or -1
    std::vector<int> node_of_cell;  // cell index -> lattice index

    std::size_t size() const { return cx.size(); }
    double cell_area() const { return h * h; }
    double area() const { return double(size()) * h * h; }
};

// Throws std::domain_error unless at least 16 cells span each diameter.
std::shared_ptr<const PlanarDomain> build_domain(const Shape& shape, double h);

struct GridFunction2D {
    std::shared_ptr<const PlanarDomain> dom;
    std::vector<double> values;

    GridFunction2D() = default;
    GridFunction2D(std::shared_ptr<const PlanarDomain> d, std::vector<double> v);
    explicit GridFunction2D(std::shared_ptr<const PlanarDomain> d)
        : GridFunction2D(d, std::vector<double>(d->size(), 0.0)) {}
};

}  // namespace fracsymm
