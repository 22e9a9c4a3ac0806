#include "printed.hpp"

#include "f4prolong/prolong/prolong.hpp"

namespace f4prolong {

const std::vector<PrintedRelation>& printed_relations() {
  static const std::vector<PrintedRelation> rel = [] {
    std::vector<PrintedRelation> r;
    auto add = [&r](std::size_t i, std::size_t j, Rational c, std::size_t k) { r.push_back({i, j, c, k}); };
    auto zero = [&r](std::size_t i, std::size_t j) { r.push_back({i, j, Rational(0), 0}); };
    // E^(2)
    add(1, 2, 1, 5), zero(1, 3), zero(1, 4), add(2, 3, 1, 6), zero(2, 4), add(3, 4, 1, 7);
    // E^(3)
    zero(1, 5), add(1, 6, 1, 8), zero(1, 7), zero(2, 5), zero(2, 6), add(2, 7, 1, 9);
    add(3, 5, -1, 8), add(3, 6, 1, 10), zero(3, 7), zero(4, 5), add(4, 6, -1, 9), zero(4, 7);
    // E^(4)
    zero(1, 8), add(1, 9, 1, 11), add(1, 10, 1, 12), zero(2, 8), zero(2, 9), zero(2, 10);
    add(3, 8, 1, 12), add(3, 9, 1, 13), zero(3, 10), add(4, 8, -1, 11), zero(4, 9), add(4, 10, -2, 13);
    // E^(5)
    zero(1, 11), zero(1, 12), add(1, 13, 1, 14), zero(2, 11), add(2, 12, 1, 15), zero(2, 13);
    add(3, 11, 1, 14), zero(3, 12), zero(3, 13), zero(4, 11), add(4, 12, -2, 14), add(4, 13, 1, 16);
    // E^(6)
    zero(1, 14), zero(1, 15), zero(1, 16), add(2, 14, 1, 17), zero(2, 15), zero(2, 16);
    zero(3, 14), zero(3, 15), zero(3, 16), add(4, 14, 1, 18), add(4, 15, -2, 17), zero(4, 16);
    // E^(7)
    zero(1, 17), zero(1, 18), zero(2, 17), add(2, 18, 1, 19);
    add(3, 17, 1, 20), zero(3, 18), add(4, 17, 1, 19), zero(4, 18);
    // E^(8), printed twice
    for (int rep = 0; rep < 2; ++rep) {
      zero(1, 19), zero(1, 20), zero(2, 19), zero(2, 20);
      add(3, 19, 1, 21), zero(3, 20), zero(4, 19), add(4, 20, Rational(1, 2), 21);
    }
    // E^(9)
    zero(1, 21), zero(2, 21), add(3, 21, 1, 22), zero(4, 21);
    // E^(10)
    zero(1, 22), add(2, 22, 1, 23), zero(3, 22), zero(4, 22);
    // E^(11)
    add(1, 23, 1, 24), zero(2, 23), zero(3, 23), zero(4, 23);
    return r;
  }();
  return rel;
}

namespace printed {

const std::vector<std::vector<Term>>& generators() {
  static const std::vector<std::vector<Term>> g{
      {{"1", "dz13"}, {"z21", "dz11"}, {"z24", "dz14"}, {"z25", "dz15"}, {"z24 z25 - 1/4 z21^2", "dz16"}},
      {{"1", "dz24"}, {"z31", "dz21"}, {"1/4 z31^2", "dz25"}},
      {{"1", "dz31"}},
      {{"-1/2 z11 z25 + 1/2 z15 z21 + 1/2 z16 z31 + 1/8 z11 z21 z31 - 1/2 z15 z24 z31", "X1"},
       {"1/2 z11 - 1/2 z13 z21 - 1/2 z14 z31 + 1/2 z13 z24 z31", "X2"},
       {"1/2 z21 - 1/2 z24 z31", "X3"},
       {"1/2 z31", "X4"},
       {"1", "Y1"},
       {"z25 - 1/4 z21 z31", "Y2"},
       {"-z15 + 1/4 z11 z31 + z13 z25 - 1/4 z13 z21 z31", "Y3"},
       {"-z16 - 1/4 z11 z21 + z14 z25 + 1/4 z11 z24 z31 - 1/4 z14 z21 z31", "Y4"}}};
  return g;
}

const std::vector<Display>& displays() {
  static const std::vector<Display> d{
      {"zeta5", 1, 2,
       {{"-1", "dz14"}, {"-z31", "dz11"}, {"-1/4 z31^2", "dz15"}, {"-z25 + 1/2 z21 z31 - 1/4 z24 z31^2", "dz16"}}},
      {"zeta6", 2, 3, {{"-1", "dz21"}, {"-1/2 z31", "dz25"}}},
      {"zeta7", 3, 4,
       {{"1/2 z16 + 1/8 z11 z21 - 1/2 z15 z24", "X1"},
        {"-1/2 z14 + 1/2 z13 z24", "X2"},
        {"-1/2 z24", "X3"},
        {"1/2", "X4"},
        {"-1/4 z21", "Y2"},
        {"1/4 z11 - 1/4 z13 z21", "Y3"},
        {"1/4 z11 z24 - 1/4 z14 z21", "Y4"}}},
      {"zeta8", 1, 6, {{"1", "dz11"}, {"1/2 z31", "dz15"}, {"-1/2 z21 + 1/2 z24 z31", "dz16"}}},
      {"zeta9", 2, 7,
       {{"-1/2 z15 + 1/8 z11 z31", "X1"},
        {"1/2 z13", "X2"},
        {"-1/2", "X3"},
        {"-1/4 z31", "Y2"},
        {"-1/4 z13 z31", "Y3"},
        {"1/4 z11 - 1/4 z14 z31", "Y4"}}},
      {"[zeta3,zeta5]", 3, 5, {{"-1", "dz11"}, {"-1/2 z31", "dz15"}, {"1/2 z21 - 1/2 z24 z31", "dz16"}}},
      {"zeta10", 3, 6, {{"-1/2", "dz25"}}},
      {"zeta11", 1, 9,
       {{"-1/2 z25 + 1/8 z21 z31", "X1"}, {"1/2", "X2"}, {"-1/4 z31", "Y3"}, {"1/4 z21 - 1/4 z24 z31", "Y4"}}},
      {"zeta12", 1, 10, {{"1/2", "dz15"}, {"1/2 z24", "dz16"}}},
      {"zeta13", 3, 9, {{"1/8 z11", "X1"}, {"-1/4", "Y2"}, {"-1/4 z13", "Y3"}, {"-1/4 z14", "Y4"}}},
      {"zeta14", 1, 13, {{"1/8 z21", "X1"}, {"-1/4", "Y3"}, {"-1/4 z24", "Y4"}}},
      {"zeta15", 2, 12, {{"1/2", "dz16"}}},
      {"[zeta4,zeta12]", 4, 12, {{"-1/4 z21", "X1"}, {"1/2", "Y3"}, {"1/2 z24", "Y4"}}},
      {"zeta16", 4, 13,
       {{"-1/8 z11^2 - 1/2 z13 z16 + 1/2 z14 z15", "X12"},
        {"1/2 z16", "X13"},
        {"-1/2 z15", "X14"},
        {"-1/2 z14", "X23"},
        {"1/2 z13", "X24"},
        {"-1/2", "X34"},
        {"1/4 z11", "Z"}}},
      {"zeta17", 2, 14, {{"1/8 z31", "X1"}, {"-1/4", "Y4"}}},
      {"zeta18", 4, 14,
       {{"-1/2 z16 - 1/4 z11 z21 + 1/2 z14 z25 + 1/2 z15 z24 + 1/8 z13 z21^2 - 1/2 z13 z24 z25", "X2"},
        {"-1/8 z21^2 + 1/2 z24 z25", "X13"},
        {"-1/2 z25", "X14"},
        {"-1/2 z24", "X23"},
        {"1/2", "X24"},
        {"1/4 z12", "Z"}}},
      {"zeta19", 2, 18,
       {{"1/2 z15 - 1/4 z11 z31 - 1/2 z13 z25 + 1/8 z14 z31^2 + 1/4 z13 z21 z31 - 1/8 z13 z24 z31^2", "X12"},
        {"1/2 z25 - 1/4 z21 z31 + 1/8 z24 z31^2", "X13"},
        {"-1/8 z31^2", "X14"},
        {"-1/2", "X23"},
        {"1/4 z31", "Z"}}},
      {"zeta20", 3, 17, {{"1/8", "X1"}}},
      {"zeta21", 3, 19,
       {{"-1/4 z11 + 1/4 z14 z31 + 1/4 z13 z21 - 1/4 z13 z24 z31", "X12"},
        {"-1/4 z21 + 1/4 z24 z31", "X13"},
        {"-1/4 z31", "X14"},
        {"1/4", "Z"}}},
      {"zeta22", 3, 21, {{"1/4 z14 - 1/4 z13 z24", "X12"}, {"1/4 z24", "X13"}, {"-1/4", "X14"}}},
      {"zeta23", 2, 22, {{"-1/4 z13", "X12"}, {"1/4", "X13"}}},
      {"zeta24", 1, 23, {{"-1/4", "X12"}}}};
  return d;
}

}  // namespace printed

}  // namespace f4prolong
