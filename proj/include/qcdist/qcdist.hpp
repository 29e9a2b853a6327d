// Umbrella header for the qcdist library.
#pragma once

#include "qcdist/ball.hpp"
#include "qcdist/check_report.hpp"
#include "qcdist/distortion_bounds.hpp"
#include "qcdist/elliptic.hpp"
#include "qcdist/grid.hpp"
#include "qcdist/grotzsch.hpp"
#include "qcdist/mn_lemma.hpp"
#include "qcdist/parallel.hpp"
#include "qcdist/report_io.hpp"
#include "qcdist/ring_capacity.hpp"
#include "qcdist/types.hpp"
#include "qcdist/verify_suites.hpp"
