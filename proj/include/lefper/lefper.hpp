#pragma once

#include "lefper/bigint.hpp"
#include "lefper/classify.hpp"
#include "lefper/error.hpp"
#include "lefper/homology.hpp"
#include "lefper/lefschetz.hpp"
#include "lefper/numtheory.hpp"
#include "lefper/oracle.hpp"
#include "lefper/series.hpp"
#include "lefper/version.hpp"
#include "lefper/zeta.hpp"
