"""Named normal subgroups and their verification reports."""
