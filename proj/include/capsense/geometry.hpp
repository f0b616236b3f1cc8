#pragma once

#include <array>
#include <string>
#include <variant>

namespace capsense {

// Lateral shapes, centroid at the origin. The pentagon is regular with one
// vertex on the +y axis.
struct Circle {
    double radius;
};

struct Ellipse {
    double semi_major;  // a
    double semi_minor;  // b, a >= b after normalization
};

struct Square {
    double side;
};

struct Rectangle {
    double side_a;  // a >= b after normalization
    double side_b;
};

struct Pentagon {
    double edge;
};

struct Cantilever {
    double length;  // clamped edge at x = 0, free tip at x = length
    double width;
};

using Shape = std::variant<Circle, Ellipse, Square, Rectangle, Pentagon, Cantilever>;

struct DiaphragmGeometry {
    Shape shape;
    double thickness;

    DiaphragmGeometry(Shape shape, double thickness);
};

// Validates dimensions and normalizes ellipse/rectangle so a >= b.
Shape make_shape(Shape shape);

double surface_area(const Shape& shape);
double surface_area(const DiaphragmGeometry& geometry);

// Point-in-shape test in centroid coordinates (cantilever: x in [0,L]).
bool contains(const Shape& shape, double x, double y);

// Half-widths of the bounding box, {x, y}; cantilever box is [0,L]x[-w/2,w/2]
// reported as half-extents of that box about its own center.
std::array<double, 2> half_extents(const Shape& shape);

// Vertices of the regular pentagon, counter-clockwise from the +y vertex.
std::array<std::array<double, 2>, 5> pentagon_vertices(double edge);

std::string shape_name(const Shape& shape);

bool is_circle(const Shape& shape);
bool is_cantilever(const Shape& shape);

}  // namespace capsense
