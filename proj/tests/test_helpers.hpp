#pragma once

#include <initializer_list>

#include "sumsetlab/point.hpp"

inline sumsetlab::Point pt(std::initializer_list<long long> coords) {
    sumsetlab::Point p;
    for (long long c : coords) p.push_back(sumsetlab::Int(c));
    return p;
}

inline sumsetlab::PointSet pset(int dim,
                                std::initializer_list<std::initializer_list<long long>> pts) {
    std::vector<sumsetlab::Point> v;
    for (const auto& p : pts) v.push_back(pt(p));
    return sumsetlab::PointSet(dim, std::move(v));
}
