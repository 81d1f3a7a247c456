#pragma once

#include "descent_lab/characters.hpp"
#include "descent_lab/class_algebra.hpp"
#include "descent_lab/commands.hpp"
#include "descent_lab/cosets.hpp"
#include "descent_lab/errors.hpp"
#include "descent_lab/linalg.hpp"
#include "descent_lab/rational.hpp"
#include "descent_lab/solomon.hpp"
#include "descent_lab/table_io.hpp"
#include "descent_lab/verdict.hpp"
#include "descent_lab/weyl.hpp"
