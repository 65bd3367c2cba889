"""Unicode-based Sindhi text-processing engine.

Submodules:

* ``charset``    -- the standardized 55-entry repertoire plus diacritics,
  with category / joining / direction classification.
* ``shaping``    -- contextual cursive shaper (isolated/initial/medial/final
  form tags and the lam-alif ligature).
* ``ordering``   -- logical-to-visual reordering for right-to-left display.
* ``keyboard``   -- keyboard layouts and key-event translation.
* ``document``   -- logical-order editing buffer with cursor, undo/redo,
  find and UTF-8 file I/O.
* ``dictionary`` -- bilingual dictionary loading and lookup.
* ``service``    -- request handler and local HTTP service for the editor UI.
* ``cli``        -- command-line front end.
"""

__version__ = "0.1.0"
