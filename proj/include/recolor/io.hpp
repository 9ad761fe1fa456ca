#pragma once

#include <iosfwd>
#include <string>

#include "recolor/graph.hpp"
#include "recolor/schedule.hpp"

namespace recolor {

// Text formats. Lines starting with '#' (after optional whitespace) are
// ignored everywhere; whitespace is free-form.
//   graph:     "n m" followed by m lines "u v" (0-based)
//   coloring:  one integer per node
//   lists:     one line per node with its allowed colors
//   schedule:  one line per node, "v: c0 c1 ... cl"

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Coloring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Coloring& x);

ListAssignment read_lists(std::istream& in);
void write_lists(std::ostream& out, const ListAssignment& lists);

Schedule read_schedule(std::istream& in);
void write_schedule(std::ostream& out, const Schedule& sch);

// File helpers; failures to open throw ErrorKind::io.
Graph load_graph(const std::string& path);
Coloring load_coloring(const std::string& path);
ListAssignment load_lists(const std::string& path);
Schedule load_schedule(const std::string& path);
void save_graph(const std::string& path, const Graph& g);
void save_coloring(const std::string& path, const Coloring& x);
void save_lists(const std::string& path, const ListAssignment& lists);
void save_schedule(const std::string& path, const Schedule& sch);

} // namespace recolor
