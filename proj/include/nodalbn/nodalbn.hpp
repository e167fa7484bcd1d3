#pragma once

#include "nodalbn/brill_noether.hpp"
#include "nodalbn/curve_graph.hpp"
#include "nodalbn/moduli_components.hpp"
#include "nodalbn/ordering.hpp"
#include "nodalbn/polarization.hpp"
#include "nodalbn/sheaf_descriptor.hpp"
