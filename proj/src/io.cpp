#include "recolor/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace recolor {

namespace {

// Non-comment, non-blank lines.
std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        lines.push_back(line);
    }
    return lines;
}

std::vector<long long> numbers(const std::string& text) {
    std::istringstream in(text);
    std::vector<long long> out;
    long long value = 0;
    while (in >> value) {
        out.push_back(value);
    }
    in.clear();
    std::string rest;
    if (in >> rest) {
        fail(ErrorKind::format, "unexpected token '" + rest + "'");
    }
    return out;
}

std::vector<long long> all_numbers(std::istream& in) {
    std::vector<long long> out;
    for (const auto& line : content_lines(in)) {
        auto part = numbers(line);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

template <typename T, typename Fn>
T load(const std::string& path, Fn read) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::io, "cannot open " + path);
    return read(in);
}

template <typename T, typename Fn>
void save(const std::string& path, const T& value, Fn write) {
    std::ofstream out(path);
    require(static_cast<bool>(out), ErrorKind::io, "cannot write " + path);
    write(out, value);
    require(static_cast<bool>(out), ErrorKind::io, "write failed for " + path);
}

} // namespace

Graph read_graph(std::istream& in) {
    const auto values = all_numbers(in);
    require(values.size() >= 2, ErrorKind::format, "graph needs a header 'n m'");
    const auto n = values[0];
    const auto m = values[1];
    require(n >= 0 && m >= 0 && values.size() == static_cast<std::size_t>(2 + 2 * m), ErrorKind::format,
            "graph edge count does not match header");
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        edges.emplace_back(static_cast<Node>(values[2 + 2 * i]), static_cast<Node>(values[3 + 2 * i]));
    }
    return Graph(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

Coloring read_coloring(std::istream& in) {
    Coloring x;
    for (long long value : all_numbers(in)) {
        x.push_back(static_cast<Color>(value));
    }
    return x;
}

void write_coloring(std::ostream& out, const Coloring& x) {
    for (Color c : x) {
        out << c << '\n';
    }
}

ListAssignment read_lists(std::istream& in) {
    ListAssignment lists;
    for (const auto& line : content_lines(in)) {
        std::vector<Color> list;
        for (long long value : numbers(line)) {
            list.push_back(static_cast<Color>(value));
        }
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        require(!list.empty(), ErrorKind::format, "empty color list");
        lists.push_back(std::move(list));
    }
    return lists;
}

void write_lists(std::ostream& out, const ListAssignment& lists) {
    for (const auto& list : lists) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            out << (i ? " " : "") << list[i];
        }
        out << '\n';
    }
}

Schedule read_schedule(std::istream& in) {
    std::vector<std::vector<Color>> per_node;
    for (const auto& line : content_lines(in)) {
        const auto colon = line.find(':');
        require(colon != std::string::npos, ErrorKind::format, "schedule line lacks 'v:'");
        const auto head = numbers(line.substr(0, colon));
        require(head.size() == 1 && head[0] == static_cast<long long>(per_node.size()), ErrorKind::format,
                "schedule lines must list nodes 0, 1, 2, ... in order");
        std::vector<Color> seq;
        for (long long value : numbers(line.substr(colon + 1))) {
            seq.push_back(static_cast<Color>(value));
        }
        per_node.push_back(std::move(seq));
    }
    return Schedule(std::move(per_node));
}

void write_schedule(std::ostream& out, const Schedule& sch) {
    for (Node v = 0; v < sch.size(); ++v) {
        out << v << ':';
        for (Color c : sch.sequence(v)) {
            out << ' ' << c;
        }
        out << '\n';
    }
}

Graph load_graph(const std::string& path) { return load<Graph>(path, [](auto& in) { return read_graph(in); }); }
Coloring load_coloring(const std::string& path) {
    return load<Coloring>(path, [](auto& in) { return read_coloring(in); });
}
ListAssignment load_lists(const std::string& path) {
    return load<ListAssignment>(path, [](auto& in) { return read_lists(in); });
}
Schedule load_schedule(const std::string& path) {
    return load<Schedule>(path, [](auto& in) { return read_schedule(in); });
}
void save_graph(const std::string& path, const Graph& g) {
    save(path, g, [](auto& out, const auto& v) { write_graph(out, v); });
}
void save_coloring(const std::string& path, const Coloring& x) {
    save(path, x, [](auto& out, const auto& v) { write_coloring(out, v); });
}
void save_lists(const std::string& path, const ListAssignment& lists) {
    save(path, lists, [](auto& out, const auto& v) { write_lists(out, v); });
}
void save_schedule(const std::string& path, const Schedule& sch) {
    save(path, sch, [](auto& out, const auto& v) { write_schedule(out, v); });
}

} // namespace recolor
