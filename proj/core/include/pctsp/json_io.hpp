#ifndef PCTSP_JSON_IO_HPP
#define PCTSP_JSON_IO_HPP

#include <iosfwd>
#include <string>

#include "pctsp/instance.hpp"

namespace pctsp {

// Instance file: one JSON object
//   {"kind": "euclidean"|"matrix", "points": [[x,y],...] | "weights":
//    [[...],...], "colors": [c0,...], "k": K}
// Exactly one of points/weights is present, matching the kind.
// Tour file: {"order": [v0,...,v_{n-1}]}.
// Parse or validation failures throw std::invalid_argument.

Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst);
void write_instance_file(const std::string& path, const Instance& inst);

Tour read_tour(std::istream& in);
Tour read_tour_file(const std::string& path);
void write_tour(std::ostream& out, const Tour& tour);
void write_tour_file(const std::string& path, const Tour& tour);

}  // namespace pctsp

#endif
