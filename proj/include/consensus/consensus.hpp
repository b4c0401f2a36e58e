#pragma once

// Umbrella header.

#include "consensus/bignat.hpp"
#include "consensus/bounds.hpp"
#include "consensus/brute_force.hpp"
#include "consensus/detect.hpp"
#include "consensus/errors.hpp"
#include "consensus/impartial.hpp"
#include "consensus/io.hpp"
#include "consensus/mahonian.hpp"
#include "consensus/mallows.hpp"
#include "consensus/preference.hpp"
#include "consensus/preflib.hpp"
#include "consensus/profile.hpp"
#include "consensus/rng.hpp"
#include "consensus/single_peaked.hpp"
#include "consensus/stability.hpp"
#include "consensus/sweep.hpp"
