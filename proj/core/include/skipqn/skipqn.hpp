#pragma once

#include "skipqn/convolution.hpp"
#include "skipqn/error.hpp"
#include "skipqn/metrics.hpp"
#include "skipqn/model.hpp"
#include "skipqn/mva.hpp"
#include "skipqn/oracle.hpp"
#include "skipqn/random_model.hpp"
#include "skipqn/report.hpp"
#include "skipqn/scaled.hpp"
#include "skipqn/stable_mva.hpp"
#include "skipqn/version.hpp"
