#pragma once

#include "onelap/certificate.hpp"
#include "onelap/cheeger.hpp"
#include "onelap/eigenset.hpp"
#include "onelap/energy.hpp"
#include "onelap/error.hpp"
#include "onelap/geometry.hpp"
#include "onelap/grid.hpp"
#include "onelap/io.hpp"
#include "onelap/solver.hpp"
