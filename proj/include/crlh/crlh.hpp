#pragma once

// Umbrella header for the crlh library: thermal-quantum effective response of
// a mesoscopic CRLH transmission-line unit cell.

#include "crlh/constants.hpp"
#include "crlh/crossings.hpp"
#include "crlh/dispersion.hpp"
#include "crlh/presets.hpp"
#include "crlh/response.hpp"
#include "crlh/rootfind.hpp"
#include "crlh/serialize.hpp"
#include "crlh/sweep.hpp"
#include "crlh/thermal.hpp"
#include "crlh/unit_cell.hpp"
#include "crlh/version.hpp"
