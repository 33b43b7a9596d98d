#include "vssc/grid.hpp"

namespace vssc {

TorusGrid::TorusGrid(int n1, int n2, Domain kind) : n1_(n1), n2_(n2), kind_(kind) {
    if (n1 < 8 || n2 < 8 || n1 % 2 != 0 || n2 % 2 != 0)
        throw GridMismatch("grid sizes must be even and >= 8");
}

} // namespace vssc
