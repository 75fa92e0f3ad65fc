"""Generate one API reference page per public ``gadget_qec`` module."""

from pathlib import Path

import mkdocs_gen_files

PACKAGE = Path("gadget_qec")
API_DIR = Path("api")

nav = mkdocs_gen_files.nav.Nav()

for path in sorted(PACKAGE.rglob("*.py")):
    parts = path.relative_to(PACKAGE).with_suffix("").parts
    # private modules are documented through their package
    if parts[-1].startswith("_") and parts[-1] != "__init__":
        continue
    doc_path = path.relative_to(PACKAGE).with_suffix(".md")
    if parts[-1] == "__init__":
        parts = parts[:-1]
        doc_path = doc_path.with_name("index.md")
    if not parts:
        continue

    nav[parts] = doc_path.as_posix()
    with mkdocs_gen_files.open(API_DIR / doc_path, "w") as fd:
        print("::: " + ".".join(parts), file=fd)
    mkdocs_gen_files.set_edit_path(API_DIR / doc_path, path)

with mkdocs_gen_files.open(API_DIR / "SUMMARY.md", "w") as nav_file:
    nav_file.writelines(nav.build_literate_nav())
