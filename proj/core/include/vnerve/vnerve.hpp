#ifndef VNERVE_VNERVE_HPP
#define VNERVE_VNERVE_HPP

#include "vnerve/betti.hpp"
#include "vnerve/cell_complex.hpp"
#include "vnerve/complex_io.hpp"
#include "vnerve/cycles.hpp"
#include "vnerve/disks.hpp"
#include "vnerve/error.hpp"
#include "vnerve/generate.hpp"
#include "vnerve/geometry.hpp"
#include "vnerve/nerves.hpp"
#include "vnerve/proximity.hpp"
#include "vnerve/report.hpp"
#include "vnerve/svg.hpp"

#endif
