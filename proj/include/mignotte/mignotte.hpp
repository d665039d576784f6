#pragma once

//! Umbrella header.

#include "mignotte/analysis.hpp"
#include "mignotte/construction.hpp"
#include "mignotte/moduli_file.hpp"
#include "mignotte/numtheory.hpp"
#include "mignotte/sharing.hpp"
