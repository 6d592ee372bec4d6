#pragma once

#include "termclone/clones.hpp"
#include "termclone/element.hpp"
#include "termclone/encoding.hpp"
#include "termclone/error.hpp"
#include "termclone/free_algebra.hpp"
#include "termclone/models.hpp"
#include "termclone/report.hpp"
#include "termclone/rewrite.hpp"
#include "termclone/term.hpp"
