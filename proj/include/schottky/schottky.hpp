#pragma once

#include "schottky/assembly.hpp"
#include "schottky/census.hpp"
#include "schottky/disc.hpp"
#include "schottky/errors.hpp"
#include "schottky/fixed_locus.hpp"
#include "schottky/json_io.hpp"
#include "schottky/moebius.hpp"
#include "schottky/numeric.hpp"
#include "schottky/realize.hpp"
#include "schottky/serial.hpp"
#include "schottky/signatures.hpp"
#include "schottky/sphere.hpp"
#include "schottky/svg.hpp"
