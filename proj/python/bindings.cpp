#include <pybind11/pybind11.h>
PYBIND11_MODULE(_radial_qec, m) { m.doc() = "radial_qec"; }
