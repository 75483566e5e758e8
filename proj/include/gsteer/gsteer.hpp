#pragma once

#include "gsteer/appendix.hpp"
#include "gsteer/canonical.hpp"
#include "gsteer/conditioning.hpp"
#include "gsteer/dynamics.hpp"
#include "gsteer/error.hpp"
#include "gsteer/format.hpp"
#include "gsteer/io.hpp"
#include "gsteer/oracle.hpp"
#include "gsteer/phase_space.hpp"
#include "gsteer/states.hpp"
#include "gsteer/steering.hpp"
#include "gsteer/triangoloid.hpp"
#include "gsteer/version.hpp"
