#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "recolor/io.hpp"

using namespace recolor;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::precondition;
}

} // namespace

TEST_CASE("graph text round trip") {
    const auto g = random_subcubic(30, 4);
    std::stringstream buf;
    write_graph(buf, g);
    CHECK(read_graph(buf) == g);
}

TEST_CASE("comments and free whitespace are ignored") {
    std::istringstream in("# header\n3   2\n\n  # edge list\n0 1\n1\t2\n");
    const auto g = read_graph(in);
    CHECK(g.size() == 3);
    CHECK(g.adjacent(1, 2));
    std::istringstream colors("1\n# gap\n2 3\n");
    CHECK(read_coloring(colors) == Coloring{1, 2, 3});
}

TEST_CASE("coloring, lists and schedule round trips") {
    const Coloring x{3, 1, 2, 2};
    std::stringstream a;
    write_coloring(a, x);
    CHECK(read_coloring(a) == x);

    const ListAssignment lists{{1, 2, 3}, {2, 4}, {7}};
    std::stringstream b;
    write_lists(b, lists);
    CHECK(read_lists(b) == lists);
    std::istringstream unsorted("3 1 1 2\n");
    CHECK(read_lists(unsorted) == ListAssignment{{1, 2, 3}});

    const Schedule sch({{1, 2, 3}, {4}, {5, 6}});
    std::stringstream c;
    write_schedule(c, sch);
    CHECK(c.str() == "0: 1 2 3\n1: 4\n2: 5 6\n");
    const auto back = read_schedule(c);
    CHECK(back.sequence(0) == sch.sequence(0));
    CHECK(back == sch);
}

TEST_CASE("malformed input raises format errors") {
    CHECK(kind_of([] {
              std::istringstream in("3 2\n0 1\n");
              read_graph(in);
          }) == ErrorKind::format);
    CHECK(kind_of([] {
              std::istringstream in("2 1\n0 x\n");
              read_graph(in);
          }) == ErrorKind::format);
    CHECK(kind_of([] {
              std::istringstream in("2 1\n0 0\n");
              read_graph(in);
          }) == ErrorKind::format);
    CHECK(kind_of([] {
              std::istringstream in("1: 1 2\n");
              read_schedule(in);
          }) == ErrorKind::format);
    CHECK(kind_of([] {
              std::istringstream in("0 1 2\n");
              read_schedule(in);
          }) == ErrorKind::format);
    CHECK(kind_of([] {
              std::istringstream in("0:\n");
              read_schedule(in);
          }) == ErrorKind::format);
}

TEST_CASE("files") {
    const auto dir = std::filesystem::temp_directory_path() / "recolor_io_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "g.graph").string();
    const auto g = build_cycle(5);
    save_graph(path, g);
    CHECK(load_graph(path) == g);
    const auto sch_path = (dir / "x.sch").string();
    save_schedule(sch_path, Schedule({{1, 2}, {2}}));
    CHECK(load_schedule(sch_path).length() == 1);
    save_coloring((dir / "x.col").string(), {1, 2});
    CHECK(load_coloring((dir / "x.col").string()) == Coloring{1, 2});
    save_lists((dir / "x.lst").string(), {{1, 2}});
    CHECK(load_lists((dir / "x.lst").string()).size() == 1);
    CHECK(kind_of([&] { load_graph((dir / "missing").string()); }) == ErrorKind::io);
    CHECK(kind_of([&] { save_graph((dir / "no" / "such" / "dir").string(), g); }) == ErrorKind::io);
    std::filesystem::remove_all(dir);
}
