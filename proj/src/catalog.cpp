#include "superder/superalgebra.hpp"

namespace superder {

namespace {

BracketSpec br(std::string left, std::string right,
               std::initializer_list<std::pair<std::string, std::string>> terms) {
    BracketSpec sp;
    sp.left = std::move(left);
    sp.right = std::move(right);
    for (const auto& t : terms)
        sp.result.push_back(t);
    return sp;
}

// N=1 super Schrodinger algebra in (1+1)-dimensional spacetime.
// Even part span{e,f,h,p,q,z} (sl2 + Heisenberg), odd part span{E,F,G}.
// Note [E,F] = h: the sign is forced by the graded Jacobi identity given the
// rest of the table (e.g. the triples (E,E,F) and (e,F,F)); the validity
// check in from_table re-verifies all 729 triples at load time.
SuperAlgebra make_super_schrodinger() {
    return SuperAlgebra::from_table(
        "super-schrodinger",
        {{"e", 0}, {"f", 0}, {"h", 0}, {"p", 0}, {"q", 0}, {"z", 0},
         {"E", 1}, {"F", 1}, {"G", 1}},
        {
            br("h", "e", {{"2", "e"}}),
            br("h", "f", {{"-2", "f"}}),
            br("e", "f", {{"1", "h"}}),
            br("h", "p", {{"1", "p"}}),
            br("h", "q", {{"-1", "q"}}),
            br("p", "q", {{"1", "z"}}),
            br("e", "q", {{"1", "p"}}),
            br("p", "f", {{"-1", "q"}}),
            br("h", "E", {{"1", "E"}}),
            br("h", "F", {{"-1", "F"}}),
            br("e", "F", {{"-1", "E"}}),
            br("f", "E", {{"-1", "F"}}),
            br("p", "F", {{"1", "G"}}),
            br("q", "E", {{"1", "G"}}),
            br("E", "E", {{"2", "e"}}),
            br("F", "F", {{"-2", "f"}}),
            br("G", "G", {{"1", "z"}}),
            br("E", "F", {{"1", "h"}}),
            br("E", "G", {{"-1", "p"}}),
            br("F", "G", {{"1", "q"}}),
        });
}

SuperAlgebra make_osp12() {
    return SuperAlgebra::from_table(
        "osp12",
        {{"h", 0}, {"e", 0}, {"f", 0}, {"E", 1}, {"F", 1}},
        {
            br("h", "e", {{"2", "e"}}),
            br("h", "f", {{"-2", "f"}}),
            br("e", "f", {{"1", "h"}}),
            br("h", "E", {{"1", "E"}}),
            br("h", "F", {{"-1", "F"}}),
            br("e", "F", {{"-1", "E"}}),
            br("f", "E", {{"-1", "F"}}),
            br("E", "E", {{"2", "e"}}),
            br("F", "F", {{"-2", "f"}}),
            br("E", "F", {{"1", "h"}}),
        });
}

SuperAlgebra make_super_heisenberg() {
    return SuperAlgebra::from_table(
        "super-heisenberg",
        {{"p", 0}, {"q", 0}, {"z", 0}, {"G", 1}},
        {
            br("p", "q", {{"1", "z"}}),
            br("G", "G", {{"1", "z"}}),
        });
}

SuperAlgebra make_even_schrodinger() {
    return SuperAlgebra::from_table(
        "even-schrodinger",
        {{"e", 0}, {"f", 0}, {"h", 0}, {"p", 0}, {"q", 0}, {"z", 0}},
        {
            br("h", "e", {{"2", "e"}}),
            br("h", "f", {{"-2", "f"}}),
            br("e", "f", {{"1", "h"}}),
            br("h", "p", {{"1", "p"}}),
            br("h", "q", {{"-1", "q"}}),
            br("p", "q", {{"1", "z"}}),
            br("e", "q", {{"1", "p"}}),
            br("p", "f", {{"-1", "q"}}),
        });
}

}  // namespace

SuperAlgebra catalog(std::string_view name) {
    if (name == "super-schrodinger")
        return make_super_schrodinger();
    if (name == "osp12")
        return make_osp12();
    if (name == "super-heisenberg")
        return make_super_heisenberg();
    if (name == "even-schrodinger")
        return make_even_schrodinger();
    throw AlgebraFormatError("unknown catalog algebra '" + std::string(name) +
                             "'");
}

std::vector<std::string> catalog_names() {
    return {"super-schrodinger", "osp12", "super-heisenberg",
            "even-schrodinger"};
}

}  // namespace superder
